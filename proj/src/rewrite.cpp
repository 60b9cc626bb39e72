#include "stylic/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "stylic/errors.hpp"

namespace stylic {

namespace {

bool matches_at(const word_type& w, std::size_t pos, const word_type& pat) {
  if (pos + pat.size() > w.size()) return false;
  return std::equal(pat.begin(), pat.end(), w.begin() + pos);
}

void replace_at(word_type& w, std::size_t pos, std::size_t len,
                const word_type& repl) {
  word_type out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  w = std::move(out);
}

// Reduce w by the given rules; rescans only around the rewritten region.
word_type reduce(const std::vector<std::pair<word_type, word_type>>& rules,
                 word_type w, std::size_t* steps = nullptr) {
  std::size_t max_lhs = 0;
  for (const auto& r : rules) max_lhs = std::max(max_lhs, r.first.size());
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool hit = false;
    for (const auto& [lhs, rhs] : rules) {
      if (matches_at(w, pos, lhs)) {
        replace_at(w, pos, lhs.size(), rhs);
        if (steps) ++*steps;
        pos = pos > max_lhs ? pos - max_lhs + 1 : 0;
        hit = true;
        break;
      }
    }
    if (!hit) ++pos;
  }
  return w;
}

}  // namespace

word_type normal_form(const RewriteSystem& rs, word_type w) {
  return reduce(rs.rules, std::move(w));
}

CompletionOutcome knuth_bendix(const Presentation& p, const Limits& lim) {
  p.validate();

  std::vector<std::pair<word_type, word_type>> rules;
  std::deque<std::pair<word_type, word_type>> pending(p.relations.begin(),
                                                      p.relations.end());
  std::size_t steps = 0;

  auto bail = [&](const char* which) {
    return Incomplete{RewriteSystem{rules, p}, which};
  };

  while (!pending.empty()) {
    auto [u, v] = std::move(pending.front());
    pending.pop_front();
    ++steps;

    u = reduce(rules, std::move(u), &steps);
    v = reduce(rules, std::move(v), &steps);
    if (u == v) continue;
    if (shortlex_less(u, v)) std::swap(u, v);  // orient: u -> v

    if (u.size() > lim.max_word_length) return bail("max_word_length");
    if (steps > lim.max_steps) return bail("max_steps");

    // Interreduce: requeue rules whose lhs the new rule rewrites, and keep
    // the rest with freshly reduced rhs.
    std::vector<std::pair<word_type, word_type>> kept;
    std::vector<std::pair<word_type, word_type>> requeued;
    for (auto& rule : rules) {
      bool reducible = false;
      for (std::size_t i = 0; i + u.size() <= rule.first.size() && !reducible; ++i)
        reducible = matches_at(rule.first, i, u);
      if (reducible)
        requeued.push_back(std::move(rule));
      else
        kept.push_back(std::move(rule));
    }
    rules = std::move(kept);
    rules.push_back({u, v});
    if (rules.size() > lim.max_rules) return bail("max_rules");
    for (auto& rule : rules)
      rule.second = reduce(rules, rule.second, &steps);
    for (auto& eq : requeued) pending.push_back(std::move(eq));

    // Critical pairs from proper overlaps between the new rule and every
    // active rule, in both orders.  Containments cannot occur: the new lhs
    // is irreducible by the old rules and old lhs reducible by the new rule
    // were just requeued.
    const std::size_t new_index = rules.size() - 1;
    auto overlap = [&](const std::pair<word_type, word_type>& r1,
                       const std::pair<word_type, word_type>& r2) {
      const auto& [l1, r1rhs] = r1;
      const auto& [l2, r2rhs] = r2;
      for (std::size_t t = 1; t < std::min(l1.size(), l2.size()); ++t) {
        // suffix of l1 of length t == prefix of l2 of length t
        if (!std::equal(l1.end() - t, l1.end(), l2.begin())) continue;
        word_type left = r1rhs;                       // r1 . l2[t:]
        left.insert(left.end(), l2.begin() + t, l2.end());
        word_type right(l1.begin(), l1.end() - t);    // l1[:-t] . r2
        right.insert(right.end(), r2rhs.begin(), r2rhs.end());
        pending.push_back({std::move(left), std::move(right)});
        ++steps;
      }
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
      overlap(rules[new_index], rules[i]);
      if (i != new_index) overlap(rules[i], rules[new_index]);
    }
    if (steps > lim.max_steps) return bail("max_steps");
  }

  RewriteSystem rs{rules, p};
  for (const auto& [lhs, rhs] : p.relations)
    if (normal_form(rs, lhs) != normal_form(rs, rhs))
      throw std::logic_error("completion produced a system violating a relation");
  return rs;
}

}  // namespace stylic
