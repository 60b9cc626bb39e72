#pragma once

#include <utility>
#include <vector>

#include "stylic/table.hpp"
#include "stylic/word.hpp"

namespace stylic {

// A finitely presented monoid: n generators (letters 0..n-1, standing for
// a1 < a2 < ... < an) and a list of defining relations.
struct Presentation {
  unsigned generators = 0;
  std::vector<std::pair<word_type, word_type>> relations;

  // Letters in range, no relation pairing a word with itself.
  void validate() const;

  // The presets list the idempotency family a_i^2 = a_i first; everything
  // after index generators is order-sensitive structure.
  std::size_t idempotent_count() const { return generators; }
};

// Stylic presentation: a_i^2 = a_i; a_j a_i a_k = a_j a_k a_i and
// a_i a_k a_j = a_k a_i a_j for i < j < k; a_j a_i a_i = a_i a_j a_i and
// a_j a_j a_i = a_j a_i a_j for i < j.
Presentation stylic_presentation(unsigned n);

// Kiselman presentation: a_i^2 = a_i; a_i a_j a_i = a_j a_i and
// a_j a_i a_j = a_j a_i for i < j.
Presentation kiselman_presentation(unsigned n);

// Catalan presentation: a_i^2 = a_i; a_i a_k = a_k a_i for |i - k| >= 2;
// a_i a_{i+1} a_i = a_{i+1} a_i and a_{i+1} a_i a_{i+1} = a_{i+1} a_i.
Presentation catalan_presentation(unsigned n);

// An order-preserving, order-decreasing map of the chain {0, ..., m-1}.
struct Transformation {
  std::vector<unsigned> images;

  bool valid() const;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;
};

// Apply u first, then v (words act on chain points left to right).
Transformation compose(const Transformation& u, const Transformation& v);

// The monoid of all order-preserving, order-decreasing transformations of
// the chain {0, ..., n}, generated by g_i sending i to i-1 (1 <= i <= n).
// Built twice: as the closure of the generators and as the direct
// enumeration of all such maps; the two must coincide.  Serves as the
// independent model for the Catalan presentation.
MonoidTable catalan_transformation_monoid(unsigned n);

}  // namespace stylic
