#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stylic/rewrite.hpp"

namespace stylic {

enum class Verdict { pass, fail, not_checkable };

const char* to_string(Verdict v);

// A witness for a failing check: a pair of words (relation sides, identity
// sides, or representative words) with a free-form explanation.
struct Counterexample {
  std::string kind;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

// Machine-readable verdict for one claim.  Deterministic given its
// parameters; a fail verdict always carries a counterexample.
struct Report {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::fail;
  std::optional<Counterexample> counterexample;
  std::vector<std::pair<std::string, std::string>> stats;
  std::vector<std::string> notes;
};

// Human-readable rendering, one field per line.
std::string format_report(const Report& r);

// The idempotency and a_i a_j a_i = a_j a_i a_j = a_j a_i families hold in
// the rank-n stylic monoid under a_i -> a_i.  Guard: 1 <= n <= 4.
Report verify_lemma1(unsigned n, const Limits& lim = {});

// The non-idempotent stylic families hold in the rank-n Catalan monoid,
// checked in both the enumerated table and the transformation model.
Report verify_lemma2(unsigned n, const Limits& lim = {});

// The generator-fixing maps Kis_n -> Styl_n -> Cat_n are onto: source
// relations hold in each target, and sizes decrease along the chain.
Report verify_surjection_chain(unsigned n, const Limits& lim = {});

// Four-way agreement over the exhaustive identity grid (words over max_vars
// variables, lengths <= max_len): the subword criterion and satisfaction in
// the three enumerated tables must coincide on every pair.  The projected
// cost is checked against step_ceiling before any pair is evaluated.
Report verify_theorem(unsigned n, unsigned max_vars, unsigned max_len,
                      const Limits& lim = {}, unsigned threads = 1,
                      std::size_t step_ceiling = 4'000'000'000);

// The known finite basis at n=2 (part 'a') or n=3 (part 'b') holds by both
// checking paths, and the separation probe xyxzx=xyzx holds at n=2 but
// fails at n=3 with shortest witness xxx.  Also reports how many of a fixed
// smoke set of consequences the bounded derivation search reproduces
// (informational only).
Report verify_corollary2(char part, const Limits& lim = {});

// Finite-basis nonexistence for ranks >= 4 quantifies over all finite
// axiom sets; no terminating computation here decides it, so this report
// never passes.
Report verify_corollary2c();

}  // namespace stylic
