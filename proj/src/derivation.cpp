#include "stylic/derivation.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "stylic/errors.hpp"

namespace stylic {

namespace {

word_type substitute(const word_type& pattern,
                     const std::vector<word_type>& images) {
  word_type out;
  for (letter_type v : pattern)
    out.insert(out.end(), images[v].begin(), images[v].end());
  return out;
}

// Backtracking matcher: every way to read w[pos..] as the image of
// pattern[pi..] under a substitution extending the current bindings, images
// capped at max_image letters (empty allowed).  Calls sink(end) with the
// position one past each complete match; bindings are live during the call
// and restored afterwards.
template <typename Sink>
void find_instances(const word_type& w, const word_type& pattern,
                    std::size_t pi, std::size_t pos, unsigned max_image,
                    std::vector<word_type>& images, std::vector<bool>& bound,
                    Sink&& sink) {
  if (pi == pattern.size()) {
    sink(pos);
    return;
  }
  letter_type v = pattern[pi];
  if (bound[v]) {
    const word_type& img = images[v];
    if (pos + img.size() <= w.size() &&
        std::equal(img.begin(), img.end(), w.begin() + pos))
      find_instances(w, pattern, pi + 1, pos + img.size(), max_image, images,
                     bound, sink);
    return;
  }
  bound[v] = true;
  std::size_t cap = std::min<std::size_t>(max_image, w.size() - pos);
  for (std::size_t len = 0; len <= cap; ++len) {
    images[v].assign(w.begin() + pos, w.begin() + pos + len);
    find_instances(w, pattern, pi + 1, pos + len, max_image, images, bound,
                   sink);
  }
  images[v].clear();
  bound[v] = false;
}

// Variables that occur only on the replacement side are free: enumerate
// their images over the goal alphabet in shortlex order, then call sink().
template <typename Sink>
void fill_unbound(unsigned alphabet, unsigned max_image,
                  const std::vector<letter_type>& todo, std::size_t i,
                  std::vector<word_type>& images, Sink&& sink) {
  if (i == todo.size()) {
    sink();
    return;
  }
  word_type& img = images[todo[i]];
  img.clear();
  for (;;) {
    fill_unbound(alphabet, max_image, todo, i + 1, images, sink);
    std::size_t j = img.size();  // shortlex successor
    while (j > 0 && img[j - 1] == alphabet - 1) --j;
    if (j == 0) {
      if (img.size() == max_image) break;
      img.assign(img.size() + 1, 0);
    } else {
      ++img[j - 1];
      std::fill(img.begin() + j, img.end(), 0);
    }
  }
  img.clear();
}

}  // namespace

Derivation bounded_derivation(const AxiomSet& ax, const Identity& goal,
                              const Limits& lim, unsigned max_image_length) {
  if (ax.axioms.empty())
    throw input_error("derivation needs a non-empty axiom set");
  goal.validate();
  for (const Identity& a : ax.axioms) a.validate();

  Derivation out;
  if (goal.lhs == goal.rhs) {
    out.status = DerivationStatus::derived;
    return out;
  }

  struct Parent {
    std::size_t from = 0;
    DerivationStep step;
  };
  std::vector<word_type> order{goal.lhs};
  std::vector<Parent> parent(1);
  std::map<word_type, std::size_t> seen{{goal.lhs, 0}};
  std::size_t budget = lim.max_steps;
  std::optional<std::size_t> found;

  for (std::size_t head = 0; head < order.size() && !found && budget > 0;
       ++head) {
    const word_type u = order[head];  // order grows; keep a stable copy
    out.explored = head + 1;
    for (std::size_t k = 0; k < ax.axioms.size() && !found; ++k) {
      const Identity& axiom = ax.axioms[k];
      for (int dir = 0; dir < 2 && !found; ++dir) {
        const word_type& from_pat = dir ? axiom.rhs : axiom.lhs;
        const word_type& to_pat = dir ? axiom.lhs : axiom.rhs;
        std::vector<bool> in_from(axiom.variables, false);
        for (letter_type v : from_pat) in_from[v] = true;
        std::vector<letter_type> free_vars;
        for (letter_type v : to_pat)
          if (!in_from[v] && std::find(free_vars.begin(), free_vars.end(), v) ==
                                 free_vars.end())
            free_vars.push_back(v);

        std::vector<word_type> images(axiom.variables);
        std::vector<bool> bound(axiom.variables, false);
        for (std::size_t pos = 0; pos <= u.size() && !found && budget > 0;
             ++pos) {
          find_instances(
              u, from_pat, 0, pos, max_image_length, images, bound,
              [&](std::size_t end) {
                fill_unbound(goal.variables, max_image_length, free_vars, 0,
                             images, [&] {
                  if (found || budget == 0) return;
                  --budget;
                  word_type mid = substitute(to_pat, images);
                  if (u.size() - (end - pos) + mid.size() >
                      lim.max_word_length)
                    return;
                  word_type next(u.begin(), u.begin() + pos);
                  next.insert(next.end(), mid.begin(), mid.end());
                  next.insert(next.end(), u.begin() + end, u.end());
                  auto [it, fresh] = seen.emplace(std::move(next), order.size());
                  if (!fresh) return;
                  order.push_back(it->first);
                  parent.push_back(
                      {head, DerivationStep{pos, k, dir != 0, images}});
                  if (it->first == goal.rhs) found = order.size() - 1;
                });
              });
        }
      }
    }
  }

  if (found) {
    for (std::size_t at = *found; at != 0; at = parent[at].from)
      out.steps.push_back(parent[at].step);
    std::reverse(out.steps.begin(), out.steps.end());
    out.status = DerivationStatus::derived;
  }
  return out;
}

word_type apply_step(const AxiomSet& ax, const word_type& w,
                     const DerivationStep& step) {
  if (step.axiom >= ax.axioms.size())
    throw input_error("derivation step names a missing axiom");
  const Identity& axiom = ax.axioms[step.axiom];
  if (step.substitution.size() != axiom.variables)
    throw input_error("substitution arity does not match the axiom");
  const word_type& from_pat = step.reversed ? axiom.rhs : axiom.lhs;
  const word_type& to_pat = step.reversed ? axiom.lhs : axiom.rhs;
  word_type from = substitute(from_pat, step.substitution);
  if (step.position > w.size() || w.size() - step.position < from.size())
    throw input_error("derivation step position is out of range");
  if (!std::equal(from.begin(), from.end(), w.begin() + step.position))
    throw input_error("derivation step does not match the word");
  word_type to = substitute(to_pat, step.substitution);
  word_type out(w.begin(), w.begin() + step.position);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + step.position + from.size(), w.end());
  return out;
}

bool replay(const AxiomSet& ax, const Identity& goal,
            const std::vector<DerivationStep>& steps) {
  word_type w = goal.lhs;
  for (const DerivationStep& s : steps) w = apply_step(ax, w, s);
  return w == goal.rhs;
}

}  // namespace stylic
