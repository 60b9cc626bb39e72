#pragma once

#include <cstddef>
#include <vector>

#include "stylic/identity.hpp"
#include "stylic/rewrite.hpp"
#include "stylic/word.hpp"

namespace stylic {

// One replacement of a substitution instance of an axiom inside a word: at
// `position`, the image of one side of axiom `axiom` under `substitution`
// is replaced by the image of the other side.  `reversed` selects which
// side is matched (false: lhs -> rhs).  `substitution` holds one image word
// per axiom variable, over the goal's variable alphabet.
struct DerivationStep {
  std::size_t position = 0;
  std::size_t axiom = 0;
  bool reversed = false;
  std::vector<word_type> substitution;
};

enum class DerivationStatus { derived, unknown };

// A derivation is sound by construction: `steps` replays mechanically from
// the goal's left side to its right side.  `unknown` only means the bounded
// search was exhausted, never that the goal fails.
struct Derivation {
  DerivationStatus status = DerivationStatus::unknown;
  std::vector<DerivationStep> steps;
  std::size_t explored = 0;  // words expanded before the verdict
};

// Breadth-first search over words reachable from goal.lhs by single-instance
// replacements (both directions of every axiom).  Substitution images are
// capped at max_image_length letters (empty images allowed), intermediate
// words at lim.max_word_length, and total expansions at lim.max_steps.
Derivation bounded_derivation(const AxiomSet& ax, const Identity& goal,
                              const Limits& lim = {},
                              unsigned max_image_length = 3);

// Applies one step, verifying the matched segment really is the instance the
// step claims; malformed steps are an input error.
word_type apply_step(const AxiomSet& ax, const word_type& w,
                     const DerivationStep& step);

// True iff the steps transform goal.lhs into exactly goal.rhs.
bool replay(const AxiomSet& ax, const Identity& goal,
            const std::vector<DerivationStep>& steps);

}  // namespace stylic
