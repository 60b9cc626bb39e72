#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylic/rewrite.hpp"
#include "stylic/table.hpp"
#include "stylic/word.hpp"

namespace stylic {

// A formal equality of two words over a shared variable alphabet (letters
// are indices below `variables`).  Variables never mix with presentation
// generators; an identity holds in a monoid when every assignment of
// elements to variables equalizes the two sides.
struct Identity {
  word_type lhs;
  word_type rhs;
  unsigned variables = 0;

  // variables in 1..6 and every letter in range; throws input_error.
  void validate() const;

  friend bool operator==(const Identity&, const Identity&) = default;
  friend bool operator<(const Identity& a, const Identity& b) {
    if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
    if (a.rhs != b.rhs) return shortlex_less(a.rhs, b.rhs);
    return a.variables < b.variables;
  }
};

// Element id per variable index; total on the identity's variables.
using Assignment = std::vector<std::size_t>;

// A list of identities used as rewriting axioms.
struct AxiomSet {
  std::vector<Identity> axioms;
};

// Known finite bases for the identity theories at n = 2 and n = 3; any
// other n is an input error.
AxiomSet stylic_basis(unsigned n);

// Text form "xyxzx=xyzx" over the variable names x, y, z, t, u, v; an empty
// side is written "1".  The variable count is the highest name used.
Identity parse_identity(std::string_view text);
std::string format_identity(const Identity& id);

// True iff the sides evaluate equally under every assignment of table
// elements to the variables that occur in the identity.  The assignment
// space is enumerated in mixed-radix order (last occurring variable varies
// fastest) with early exit.  Throws resource_error when the projected work
// size^used * (|lhs|+|rhs|) exceeds lim.max_steps.
bool holds_in_table(const Identity& id, const MonoidTable& t,
                    const Limits& lim = {});

// First failing assignment in enumeration order, if any; variables that do
// not occur are assigned the identity element 0.
std::optional<Assignment> counterexample_assignment(const Identity& id,
                                                    const MonoidTable& t,
                                                    const Limits& lim = {});

// The subword criterion: the identity holds in the rank-n stylic monoid iff
// its sides have the same scattered subwords of length at most n.
bool holds_in_stylic(const Identity& id, unsigned n);

// Relabel variables through a permutation of 0..variables-1; satisfaction
// in any monoid is unchanged.  Non-bijective maps are an input error.
Identity rename_variables(const Identity& id,
                          const std::vector<letter_type>& permutation);

}  // namespace stylic
