#include "stylic/table.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "stylic/errors.hpp"

namespace stylic {

std::size_t MonoidTable::evaluate_word(const word_type& w) const {
  std::size_t e = 0;
  for (letter_type a : w) {
    if (a >= generator_images.size())
      throw input_error("word uses generator " + std::to_string(a + 1) +
                        " but the table has only " +
                        std::to_string(generator_images.size()));
    e = product(e, generator_images[a]);
  }
  return e;
}

std::size_t MonoidTable::evaluate(
    const word_type& w, const std::vector<std::size_t>& assignment) const {
  std::size_t e = 0;
  for (letter_type a : w) e = product(e, assignment.at(a));
  return e;
}

void MonoidTable::validate() const {
  if (size == 0) throw input_error("monoid table must have at least one element");
  if (table.size() != size * size)
    throw input_error("multiplication table has wrong shape");
  for (std::size_t v : table)
    if (v >= size) throw input_error("table entry out of range");
  for (std::size_t g : generator_images)
    if (g >= size) throw input_error("generator image out of range");

  for (std::size_t x = 0; x < size; ++x)
    if (product(0, x) != x || product(x, 0) != x)
      throw input_error("element 0 is not a two-sided identity");

  if (representatives.size() != size)
    throw input_error("need exactly one representative per element");
  if (!representatives[0].empty())
    throw input_error("representative of the identity must be the empty word");
  std::set<word_type> distinct(representatives.begin(), representatives.end());
  if (distinct.size() != size)
    throw input_error("representatives must be pairwise distinct");
  for (std::size_t x = 0; x + 1 < size; ++x)
    if (!shortlex_less(representatives[x], representatives[x + 1]))
      throw input_error("representatives must be in shortlex order");
  for (std::size_t x = 0; x < size; ++x)
    if (evaluate_word(representatives[x]) != x)
      throw input_error("representative does not evaluate to its element");

  if (size <= 200) {
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        for (std::size_t z = 0; z < size; ++z)
          if (product(product(x, y), z) != product(x, product(y, z)))
            throw input_error("multiplication is not associative");
  } else {
    // splitmix64 stream, fixed seed: deterministic sample of triples
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&s] {
      std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    for (int i = 0; i < 1'000'000; ++i) {
      std::size_t x = rnd() % size, y = rnd() % size, z = rnd() % size;
      if (product(product(x, y), z) != product(x, product(y, z)))
        throw input_error("multiplication is not associative");
    }
  }
}

bool is_j_trivial(const MonoidTable& t) {
  // MaM = MbM implies a = b.  Each principal two-sided ideal is the closure
  // of {a} under one-sided multiplication by all elements; compare ideals as
  // sorted element lists.
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t a = 0; a < t.size; ++a) {
    std::vector<char> in(t.size, 0);
    std::vector<std::size_t> stack = {a};
    in[a] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t m = 0; m < t.size; ++m) {
        for (std::size_t y : {t.product(m, x), t.product(x, m)}) {
          if (!in[y]) {
            in[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    std::vector<std::size_t> ideal;
    for (std::size_t x = 0; x < t.size; ++x)
      if (in[x]) ideal.push_back(x);
    if (!seen.emplace(std::move(ideal), a).second) return false;
  }
  return true;
}

}  // namespace stylic
