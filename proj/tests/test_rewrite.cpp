#include <doctest.h>

#include <random>
#include <variant>

#include "stylic/presentation.hpp"
#include "stylic/rewrite.hpp"
#include "stylic/word.hpp"

using namespace stylic;

namespace {

RewriteSystem complete(const Presentation& p, const Limits& lim = {}) {
  CompletionOutcome out = knuth_bendix(p, lim);
  REQUIRE(std::holds_alternative<RewriteSystem>(out));
  return std::get<RewriteSystem>(out);
}

word_type rand_word(std::mt19937& rng, unsigned max_len, unsigned alphabet) {
  std::uniform_int_distribution<unsigned> len(0, max_len);
  std::uniform_int_distribution<unsigned> let(0, alphabet - 1);
  word_type w(len(rng));
  for (auto& a : w) a = let(rng);
  return w;
}

}  // namespace

TEST_CASE("completion of the rank-2 presets, frozen normal forms") {
  RewriteSystem kis = complete(kiselman_presentation(2));
  CHECK(normal_form(kis, {0, 1, 0}) == word_type{1, 0});  // a1a2a1 -> a2a1
  CHECK(normal_form(kis, {1, 0, 1}) == word_type{1, 0});
  CHECK(normal_form(kis, {0, 0}) == word_type{0});
  CHECK(normal_form(kis, {}) == word_type{});

  RewriteSystem sty = complete(stylic_presentation(2));
  // relation family a_j a_j a_i = a_j a_i a_j: both sides one class
  CHECK(normal_form(sty, {1, 1, 0}) == normal_form(sty, {1, 0, 1}));
  CHECK(normal_form(sty, {1, 0, 0}) == normal_form(sty, {0, 1, 0}));
}

TEST_CASE("a presentation with no relations completes to the empty system") {
  RewriteSystem rs = complete(Presentation{2, {}});
  CHECK(rs.rules.empty());
  word_type w{0, 1, 1, 0};
  CHECK(normal_form(rs, w) == w);
}

TEST_CASE("rank-3 stylic completes inside the documented budget") {
  Limits lim;
  lim.max_rules = 500;
  lim.max_word_length = 12;
  CHECK(std::holds_alternative<RewriteSystem>(
      knuth_bendix(stylic_presentation(3), lim)));
}

TEST_CASE("every rule rewrites shortlex-downhill") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Presentation& p : {stylic_presentation(n),
                                  kiselman_presentation(n),
                                  catalan_presentation(n)}) {
      RewriteSystem rs = complete(p);
      for (const auto& [lhs, rhs] : rs.rules) CHECK(shortlex_less(rhs, lhs));
    }
}

TEST_CASE("source relations join after completion") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Presentation& p : {stylic_presentation(n),
                                  kiselman_presentation(n),
                                  catalan_presentation(n)}) {
      RewriteSystem rs = complete(p);
      for (const auto& [lhs, rhs] : p.relations)
        CHECK(normal_form(rs, lhs) == normal_form(rs, rhs));
    }
}

TEST_CASE("normal forms are idempotent, multiplicative, and non-increasing") {
  std::mt19937 rng(414);
  for (unsigned n = 2; n <= 3; ++n) {
    RewriteSystem rs = complete(stylic_presentation(n));
    for (int trial = 0; trial < 200; ++trial) {
      word_type u = rand_word(rng, 8, n), v = rand_word(rng, 8, n);
      word_type nu = normal_form(rs, u);
      CHECK(normal_form(rs, nu) == nu);
      CHECK_FALSE(shortlex_less(u, nu));  // reduction never goes uphill
      word_type uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      word_type glued = nu;
      const word_type nv = normal_form(rs, v);
      glued.insert(glued.end(), nv.begin(), nv.end());
      CHECK(normal_form(rs, uv) == normal_form(rs, glued));
    }
  }
}

TEST_CASE("limits turn completion into Incomplete with the right tag") {
  Presentation p = stylic_presentation(3);

  Limits tiny_rules;
  tiny_rules.max_rules = 2;
  auto a = knuth_bendix(p, tiny_rules);
  REQUIRE(std::holds_alternative<Incomplete>(a));
  CHECK(std::get<Incomplete>(a).limit == "max_rules");

  Limits tiny_words;
  tiny_words.max_word_length = 2;
  auto b = knuth_bendix(p, tiny_words);
  REQUIRE(std::holds_alternative<Incomplete>(b));
  CHECK(std::get<Incomplete>(b).limit == "max_word_length");

  Limits tiny_steps;
  tiny_steps.max_steps = 3;
  auto c = knuth_bendix(p, tiny_steps);
  REQUIRE(std::holds_alternative<Incomplete>(c));
  CHECK(std::get<Incomplete>(c).limit == "max_steps");
}
