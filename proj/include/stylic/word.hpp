#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylic {

// Letters are 0-based indices into an alphabet; a word is a finite sequence
// of letters.  The empty word is the identity of the free monoid.
using letter_type = unsigned;
using word_type = std::vector<letter_type>;

// Shortlex: length first, then lexicographic by letter index.
bool shortlex_less(const word_type& a, const word_type& b);

// Display names for letters.  Words render as the concatenation of names
// when every name is a single character, and as dot-separated names
// otherwise.  The empty word renders as "1".
class Alphabet {
 public:
  explicit Alphabet(unsigned size);
  Alphabet(unsigned size, std::vector<std::string> names);

  // Generators a1, a2, ..., an (dot-separated rendering).
  static Alphabet generators(unsigned n);
  // Identity variables, single letters from x, y, z, t, u, v (n <= 6).
  static Alphabet variables(unsigned n);

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  const std::string& name(letter_type a) const { return names_.at(a); }

  std::string format(const word_type& w) const;
  word_type parse(std::string_view text) const;

  // Throws input_error if some letter of w is out of range.
  void validate(const word_type& w) const;

 private:
  std::vector<std::string> names_;
  bool single_char_;
};

// The distinct scattered subwords (subsequences) of a word, up to a length
// bound.  Members are kept in shortlex order without duplicates; the empty
// word is always present.
struct SubwordSet {
  unsigned bound = 0;
  std::vector<word_type> members;

  bool contains(const word_type& w) const;
  friend bool operator==(const SubwordSet&, const SubwordSet&) = default;
};

// True iff p is a subsequence of w.  Greedy left-to-right matching.
bool is_subword(const word_type& p, const word_type& w);

// All distinct subsequences of w of length <= k, including the empty word.
SubwordSet subwords_up_to(const word_type& w, unsigned k);

// Simon's k-congruence: u and v have the same scattered subwords of length
// at most k.  Decided by a memoized walk over the two subsequence automata;
// the subword sets are never materialized.
bool simon_equivalent(const word_type& u, const word_type& v, unsigned k);

// Empty when simon_equivalent(u, v, k); otherwise a shortest word of the
// symmetric difference of the two subword sets, ties broken lexicographically.
std::optional<word_type> distinguishing_subword(const word_type& u,
                                                const word_type& v, unsigned k);

}  // namespace stylic
