#pragma once

#include <string>
#include <string_view>

#include "stylic/derivation.hpp"
#include "stylic/identity.hpp"
#include "stylic/presentation.hpp"
#include "stylic/table.hpp"
#include "stylic/verify.hpp"

namespace stylic {

// File formats are JSON.  Presentations: {"generators": n, "relations":
// [[word, word], ...]} with each word a list of 1-based generator indices.
// Tables: {"size", "generators" (element ids), "table" (row-major),
// "representatives" (serialized words), "engine" (informational)}.
// Malformed input throws input_error.

std::string presentation_to_json_text(const Presentation& p);
Presentation parse_presentation_json(std::string_view text);

std::string table_to_json_text(const MonoidTable& t);
// Imported tables are revalidated and tagged engine "import"; the engine
// field in the file is informational only.
MonoidTable parse_table_json(std::string_view text);

std::string report_to_json_text(const Report& r);

// Trace records: numbered steps with position, axiom index, direction and
// the substitution (variable -> image word).
std::string derivation_to_json_text(const AxiomSet& ax, const Identity& goal,
                                    const Derivation& d);
std::string format_derivation_text(const AxiomSet& ax, const Identity& goal,
                                   const Derivation& d);

// Axiom files: one identity per line, `word=word`; blank lines and lines
// starting with # are skipped.  Empty sets are an input error.
AxiomSet parse_axioms_text(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace stylic
