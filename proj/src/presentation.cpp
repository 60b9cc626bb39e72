#include "stylic/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "stylic/errors.hpp"

namespace stylic {

void Presentation::validate() const {
  if (generators < 1) throw input_error("presentation needs at least one generator");
  for (const auto& [lhs, rhs] : relations) {
    for (letter_type a : lhs)
      if (a >= generators) throw input_error("relation letter out of range");
    for (letter_type a : rhs)
      if (a >= generators) throw input_error("relation letter out of range");
    if (lhs == rhs) throw input_error("relation pairs a word with itself");
  }
}

namespace {

void require_positive(unsigned n) {
  if (n < 1) throw input_error("generator count must be positive");
}

void add_idempotents(Presentation& p) {
  for (letter_type i = 0; i < p.generators; ++i)
    p.relations.push_back({{i, i}, {i}});
}

}  // namespace

Presentation stylic_presentation(unsigned n) {
  require_positive(n);
  Presentation p{n, {}};
  add_idempotents(p);
  for (letter_type i = 0; i < n; ++i)          // a_j a_i a_k = a_j a_k a_i
    for (letter_type j = i + 1; j < n; ++j)
      for (letter_type k = j + 1; k < n; ++k)
        p.relations.push_back({{j, i, k}, {j, k, i}});
  for (letter_type i = 0; i < n; ++i)          // a_i a_k a_j = a_k a_i a_j
    for (letter_type j = i + 1; j < n; ++j)
      for (letter_type k = j + 1; k < n; ++k)
        p.relations.push_back({{i, k, j}, {k, i, j}});
  for (letter_type i = 0; i < n; ++i)          // a_j a_i a_i = a_i a_j a_i
    for (letter_type j = i + 1; j < n; ++j)
      p.relations.push_back({{j, i, i}, {i, j, i}});
  for (letter_type i = 0; i < n; ++i)          // a_j a_j a_i = a_j a_i a_j
    for (letter_type j = i + 1; j < n; ++j)
      p.relations.push_back({{j, j, i}, {j, i, j}});
  p.validate();
  return p;
}

Presentation kiselman_presentation(unsigned n) {
  require_positive(n);
  Presentation p{n, {}};
  add_idempotents(p);
  for (letter_type i = 0; i < n; ++i)
    for (letter_type j = i + 1; j < n; ++j) {
      p.relations.push_back({{i, j, i}, {j, i}});
      p.relations.push_back({{j, i, j}, {j, i}});
    }
  p.validate();
  return p;
}

Presentation catalan_presentation(unsigned n) {
  require_positive(n);
  Presentation p{n, {}};
  add_idempotents(p);
  for (letter_type i = 0; i < n; ++i)          // distant generators commute
    for (letter_type k = i + 2; k < n; ++k)
      p.relations.push_back({{i, k}, {k, i}});
  for (letter_type i = 0; i + 1 < n; ++i) {
    p.relations.push_back({{i, i + 1, i}, {i + 1, i}});
    p.relations.push_back({{i + 1, i, i + 1}, {i + 1, i}});
  }
  p.validate();
  return p;
}

bool Transformation::valid() const {
  for (std::size_t p = 0; p < images.size(); ++p) {
    if (images[p] > p) return false;
    if (p > 0 && images[p] < images[p - 1]) return false;
  }
  return true;
}

Transformation compose(const Transformation& u, const Transformation& v) {
  Transformation r;
  r.images.reserve(u.images.size());
  for (unsigned p : u.images) r.images.push_back(v.images.at(p));
  return r;
}

namespace {

// All order-preserving, order-decreasing maps on an m-chain.
std::vector<Transformation> all_monotone_decreasing(unsigned m) {
  std::vector<Transformation> out;
  Transformation cur;
  cur.images.assign(m, 0);
  auto rec = [&](auto&& self, unsigned p, unsigned low) -> void {
    if (p == m) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = low; v <= p; ++v) {
      cur.images[p] = v;
      self(self, p + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

MonoidTable catalan_transformation_monoid(unsigned n) {
  if (n < 1) throw input_error("generator count must be positive");
  if (n > 8)
    throw resource_error("transformation model is limited to n <= 8");
  const unsigned m = n + 1;

  std::vector<Transformation> gens(n);
  for (unsigned i = 1; i <= n; ++i) {
    Transformation g;
    for (unsigned p = 0; p < m; ++p) g.images.push_back(p == i ? p - 1 : p);
    gens[i - 1] = g;
  }

  Transformation id;
  for (unsigned p = 0; p < m; ++p) id.images.push_back(p);

  // BFS closure; popping in FIFO order and extending by ascending generator
  // index discovers each element through its shortlex-minimal word.
  std::vector<Transformation> elems = {id};
  std::vector<word_type> reps = {{}};
  std::map<Transformation, std::size_t> index = {{id, 0}};
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (letter_type g = 0; g < n; ++g) {
      Transformation t = compose(elems[at], gens[g]);
      if (index.emplace(t, elems.size()).second) {
        word_type w = reps[at];
        w.push_back(g);
        elems.push_back(std::move(t));
        reps.push_back(std::move(w));
      }
    }
  }

  // Independent construction: the closure must be exactly the set of all
  // order-preserving, order-decreasing maps.
  auto all = all_monotone_decreasing(m);
  if (all.size() != elems.size())
    throw std::logic_error("generator closure misses transformations");
  for (const auto& t : all)
    if (!index.count(t) || !t.valid())
      throw std::logic_error("generator closure disagrees with direct enumeration");

  MonoidTable tab;
  tab.size = elems.size();
  tab.engine = "model";
  tab.representatives = reps;
  tab.table.resize(tab.size * tab.size);
  for (std::size_t x = 0; x < tab.size; ++x)
    for (std::size_t y = 0; y < tab.size; ++y)
      tab.table[x * tab.size + y] = index.at(compose(elems[x], elems[y]));
  for (letter_type g = 0; g < n; ++g)
    tab.generator_images.push_back(index.at(gens[g]));

  // The defining relations must hold under g_i -> a_i.
  for (const auto& [lhs, rhs] : catalan_presentation(n).relations)
    if (tab.evaluate_word(lhs) != tab.evaluate_word(rhs))
      throw std::logic_error("catalan relation fails in the transformation model");

  tab.validate();
  return tab;
}

}  // namespace stylic
