#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "stylic/presentation.hpp"
#include "stylic/word.hpp"

namespace stylic {

struct Limits {
  std::size_t max_rules = 2000;
  std::size_t max_word_length = 16;
  std::size_t max_elements = 100'000;
  std::size_t max_steps = 10'000'000;
};

// An oriented string rewriting system: every rule rewrites shortlex-downhill
// (rhs precedes lhs).  Produced by completion, in which case all critical
// pairs resolve and normal forms are unique.
struct RewriteSystem {
  std::vector<std::pair<word_type, word_type>> rules;
  Presentation source;
};

// Completion gave up: the partial system plus the name of the limit that
// fired ("max_rules", "max_word_length" or "max_steps").
struct Incomplete {
  RewriteSystem partial;
  std::string limit;
};

using CompletionOutcome = std::variant<RewriteSystem, Incomplete>;

// Shortlex Knuth-Bendix completion.  Critical pairs are processed
// first-in-first-out with interreduction after each added rule.  On success
// the system is confluent and presents the same monoid: both sides of every
// source relation reach the same normal form.
CompletionOutcome knuth_bendix(const Presentation& p, const Limits& lim = {});

// The irreducible descendant of w.  Unique, and shortlex-minimal in the
// congruence class, when the system is confluent.
word_type normal_form(const RewriteSystem& rs, word_type w);

}  // namespace stylic
