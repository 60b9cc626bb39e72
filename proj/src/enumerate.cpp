#include "stylic/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "stylic/errors.hpp"

namespace stylic {

namespace {

// --- table from a confluent rewrite system --------------------------------

MonoidTable table_from_rewriting(const RewriteSystem& rs, const Limits& lim) {
  const unsigned n = rs.source.generators;

  std::map<word_type, std::size_t> id;
  std::vector<word_type> reps;
  id.emplace(word_type{}, 0);
  reps.push_back({});
  for (std::size_t at = 0; at < reps.size(); ++at) {
    word_type w = reps[at];
    for (letter_type g = 0; g < n; ++g) {
      w.push_back(g);
      word_type u = normal_form(rs, w);
      w.pop_back();
      if (id.emplace(u, reps.size()).second) {
        reps.push_back(std::move(u));
        if (reps.size() > lim.max_elements)
          throw resource_error("enumeration exceeded max_elements = " +
                               std::to_string(lim.max_elements));
      }
    }
  }

  // Reductions can surface long normal forms early, so sort explicitly.
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shortlex_less(reps[a], reps[b]);
  });

  MonoidTable tab;
  tab.size = reps.size();
  tab.engine = "kb";
  if (tab.size * tab.size > lim.max_steps)
    throw resource_error("explicit table would exceed max_steps budget");
  tab.representatives.resize(tab.size);
  for (std::size_t i = 0; i < tab.size; ++i)
    tab.representatives[i] = reps[order[i]];
  std::map<word_type, std::size_t> rank;
  for (std::size_t i = 0; i < tab.size; ++i)
    rank.emplace(tab.representatives[i], i);

  tab.table.resize(tab.size * tab.size);
  for (std::size_t x = 0; x < tab.size; ++x)
    for (std::size_t y = 0; y < tab.size; ++y) {
      word_type w = tab.representatives[x];
      w.insert(w.end(), tab.representatives[y].begin(),
               tab.representatives[y].end());
      tab.table[x * tab.size + y] = rank.at(normal_form(rs, std::move(w)));
    }
  for (letter_type g = 0; g < n; ++g)
    tab.generator_images.push_back(rank.at(normal_form(rs, {g})));

  tab.validate();
  return tab;
}

// --- congruence-closure oracle ---------------------------------------------

// Words of length <= L over n letters indexed in shortlex order: block of
// length l starts at 1 + n + ... + n^(l-1), and within a block a word is its
// base-n numeral.
struct Ball {
  unsigned n;
  unsigned length_bound;
  std::vector<std::uint64_t> block_start;  // block_start[l], l in 0..L+1

  Ball(unsigned n_, unsigned bound) : n(n_), length_bound(bound) {
    block_start.assign(bound + 2, 0);
    for (unsigned l = 0; l <= bound; ++l)
      block_start[l + 1] = block_start[l] * n + 1;
    // block_start[l+1] = sum_{i<=l} n^i; total ball size = block_start[L+1]
  }

  std::uint64_t size() const { return block_start[length_bound + 1]; }

  std::uint64_t index(const word_type& w) const {
    std::uint64_t v = 0;
    for (letter_type a : w) v = v * n + a;
    return block_start[w.size()] + v;
  }

  word_type word(std::uint64_t idx) const {
    unsigned l = 0;
    while (idx >= block_start[l + 1]) ++l;
    std::uint64_t v = idx - block_start[l];
    word_type w(l);
    for (unsigned i = l; i-- > 0; v /= n) w[i] = static_cast<letter_type>(v % n);
    return w;
  }
};

struct UnionFind {
  std::vector<std::int32_t> parent;

  explicit UnionFind(std::size_t m) : parent(m, -1) {}

  std::int32_t find(std::int32_t x) {
    std::int32_t root = x;
    while (parent[root] >= 0) root = parent[root];
    while (parent[x] >= 0) {
      std::int32_t up = parent[x];
      parent[x] = root;
      x = up;
    }
    return root;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (parent[a] > parent[b]) std::swap(a, b);  // keep the heavier root
    parent[a] += parent[b];
    parent[b] = a;
  }
};

// One closure attempt at a fixed bound.  Classes are the connected
// components of the ball under bidirectional single-relation replacement.
// The candidate table lives on the classes generated by the letters, closed
// under concatenation of class members; the certificate checks that this
// closure stays inside the ball, that the operation is associative, and
// that every relation evaluates equally.  Any table passing those checks is
// isomorphic to the presented monoid: it is letter-generated and satisfies
// the relations, so the presented monoid maps onto it, while sending each
// class to the congruence class of its member splits that surjection.
// Finally the representatives are re-derived from the certified table
// itself as true shortlex normal forms, so numbering and words agree with
// the completion engine bit for bit.  nullopt means the bound is too small.
std::optional<MonoidTable> closure_attempt(const Presentation& p, unsigned L,
                                           const Limits& lim) {
  const unsigned n = p.generators;
  const Ball ball(n, L);
  const std::uint64_t B = ball.size();
  if (B > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw resource_error("closure ball too large to index");
  UnionFind uf(B);

  // Union every single-relation replacement, both directions.
  for (std::uint64_t idx = 0; idx < B; ++idx) {
    word_type w = ball.word(idx);
    for (const auto& [lhs, rhs] : p.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const word_type& from = dir ? rhs : lhs;
        const word_type& to = dir ? lhs : rhs;
        if (from.size() > w.size() ||
            w.size() - from.size() + to.size() > L)
          continue;
        for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), w.begin() + pos)) continue;
          word_type r(w.begin(), w.begin() + pos);
          r.insert(r.end(), to.begin(), to.end());
          r.insert(r.end(), w.begin() + pos + from.size(), w.end());
          uf.unite(static_cast<std::int32_t>(idx),
                   static_cast<std::int32_t>(ball.index(r)));
        }
      }
    }
  }

  // Shortlex-least member of every class, in one ordered pass.
  std::vector<std::int32_t> least(B, -1);
  for (std::uint64_t idx = 0; idx < B; ++idx) {
    std::int32_t root = uf.find(static_cast<std::int32_t>(idx));
    if (least[root] < 0) least[root] = static_cast<std::int32_t>(idx);
  }

  // Letter-generated classes, closed under concatenation of members.
  std::map<std::int32_t, std::size_t> elem_of_root;
  std::vector<word_type> member;  // one ball word per element
  auto intern = [&](std::int32_t root) {
    auto [it, fresh] = elem_of_root.try_emplace(root, member.size());
    if (fresh) {
      member.push_back(ball.word(static_cast<std::uint64_t>(least[root])));
      if (member.size() > lim.max_elements)
        throw resource_error("closure exceeded max_elements = " +
                             std::to_string(lim.max_elements));
    }
    return it->second;
  };
  auto root_of = [&](const word_type& w) {
    return uf.find(static_cast<std::int32_t>(ball.index(w)));
  };
  intern(root_of({}));  // the empty word has ball index 0, so element 0 = 1
  std::vector<std::size_t> letter_elem(n);
  for (letter_type g = 0; g < n; ++g) letter_elem[g] = intern(root_of({g}));

  // Concatenations leaving the ball defeat the certificate.
  auto product_root = [&](std::size_t x,
                          std::size_t y) -> std::optional<std::int32_t> {
    word_type w = member[x];
    w.insert(w.end(), member[y].begin(), member[y].end());
    if (w.size() > L) return std::nullopt;
    return root_of(w);
  };
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t snapshot = member.size();
    for (std::size_t x = 0; x < snapshot; ++x)
      for (std::size_t y = 0; y < snapshot; ++y) {
        std::optional<std::int32_t> r = product_root(x, y);
        if (!r) return std::nullopt;
        intern(*r);
      }
    grew = member.size() != snapshot;
  }

  const std::size_t m = member.size();
  if (m * m > lim.max_steps)
    throw resource_error("explicit table would exceed max_steps budget");
  std::vector<std::size_t> prod(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      prod[x * m + y] = elem_of_root.at(*product_root(x, y));

  // Certificate: associativity over all triples, then the relations.
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (prod[prod[x * m + y] * m + z] != prod[x * m + prod[y * m + z]])
          return std::nullopt;
  auto eval = [&](const word_type& w) {
    std::size_t e = 0;
    for (letter_type a : w) e = prod[e * m + letter_elem[a]];
    return e;
  };
  for (const auto& [lhs, rhs] : p.relations)
    if (eval(lhs) != eval(rhs)) return std::nullopt;

  // True shortlex representatives, read off the certified table: minimal
  // words are prefix-closed, so breadth-first discovery from the identity
  // with letters in ascending order meets every element at its normal form.
  std::vector<word_type> rep(m);
  std::vector<char> found(m, 0);
  std::vector<std::size_t> disc{0};
  found[0] = 1;
  for (std::size_t at = 0; at < disc.size(); ++at) {
    std::size_t e = disc[at];
    for (letter_type g = 0; g < n; ++g) {
      std::size_t to = prod[e * m + letter_elem[g]];
      if (found[to]) continue;
      found[to] = 1;
      rep[to] = rep[e];
      rep[to].push_back(g);
      disc.push_back(to);
    }
  }
  if (disc.size() != m) return std::nullopt;  // not letter-generated: artifact

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return shortlex_less(rep[a], rep[b]);
  });
  std::vector<std::size_t> new_id(m);
  for (std::size_t i = 0; i < m; ++i) new_id[order[i]] = i;

  MonoidTable tab;
  tab.size = m;
  tab.engine = "closure";
  tab.representatives.resize(m);
  for (std::size_t i = 0; i < m; ++i) tab.representatives[i] = rep[order[i]];
  tab.table.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      tab.table[new_id[x] * m + new_id[y]] = new_id[prod[x * m + y]];
  for (letter_type g = 0; g < n; ++g)
    tab.generator_images.push_back(new_id[letter_elem[g]]);

  tab.validate();
  return tab;
}

}  // namespace

MonoidTable brute_force_closure(const Presentation& p, const Limits& lim) {
  p.validate();
  std::size_t longest_side = 1;
  for (const auto& [lhs, rhs] : p.relations)
    longest_side = std::max({longest_side, lhs.size(), rhs.size()});

  for (unsigned L = std::max<unsigned>(2, static_cast<unsigned>(longest_side));
       L <= lim.max_word_length; ++L) {
    if (Ball(p.generators, L).size() > lim.max_steps)
      throw resource_error(
          "closure ball at length bound " + std::to_string(L) +
          " exceeds max_steps; raise max_steps or lower max_word_length");
    if (auto tab = closure_attempt(p, L, lim)) return *tab;
  }
  throw resource_error(
      "class structure not closed at length bound " +
      std::to_string(lim.max_word_length) + "; raise max_word_length");
}

MonoidTable enumerate(const Presentation& p, const Limits& lim) {
  p.validate();
  CompletionOutcome outcome = knuth_bendix(p, lim);
  if (auto* rs = std::get_if<RewriteSystem>(&outcome))
    return table_from_rewriting(*rs, lim);
  return brute_force_closure(p, lim);
}

}  // namespace stylic
