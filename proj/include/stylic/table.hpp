#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stylic/word.hpp"

namespace stylic {

// An explicit finite monoid: full multiplication table, one shortlex-minimal
// representative word per element, and the images of the presentation
// generators.  Element 0 is the identity and its representative is the
// empty word; element ids follow the shortlex order of representatives, so
// tables are reproducible bit-for-bit across engines.
struct MonoidTable {
  std::size_t size = 0;
  std::vector<std::size_t> table;             // row-major, size x size
  std::vector<std::size_t> generator_images;  // one element id per generator
  std::vector<word_type> representatives;     // representatives[0] is empty
  std::string engine;                         // "kb", "closure", "model", "import"

  std::size_t product(std::size_t x, std::size_t y) const {
    return table[x * size + y];
  }

  // Fold a word over generator letters, starting at the identity.
  std::size_t evaluate_word(const word_type& w) const;

  // Fold a word over variable letters under an assignment of element ids.
  std::size_t evaluate(const word_type& w,
                       const std::vector<std::size_t>& assignment) const;

  // Checks the structural invariants: entries in range, identity laws,
  // distinct representatives with representatives[0] empty, representatives
  // consistent with the table, and associativity (exhaustive up to size 200,
  // deterministically sampled above).  Throws input_error on violation.
  void validate() const;

  friend bool operator==(const MonoidTable& a, const MonoidTable& b) {
    return a.size == b.size && a.table == b.table &&
           a.generator_images == b.generator_images &&
           a.representatives == b.representatives;
  }
};

// True iff distinct elements generate distinct two-sided principal ideals.
bool is_j_trivial(const MonoidTable& t);

}  // namespace stylic
