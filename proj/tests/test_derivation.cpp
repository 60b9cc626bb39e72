#include <doctest.h>

#include <random>

#include "stylic/derivation.hpp"
#include "stylic/errors.hpp"
#include "stylic/identity.hpp"

using namespace stylic;

TEST_CASE("equal sides need no steps") {
  AxiomSet basis = stylic_basis(2);
  Derivation d = bounded_derivation(basis, parse_identity("x=x"));
  CHECK(d.status == DerivationStatus::derived);
  CHECK(d.steps.empty());
  CHECK(replay(basis, parse_identity("x=x"), d.steps));
}

TEST_CASE("one application of an axiom") {
  AxiomSet basis = stylic_basis(2);
  // xyxzx=xyzx under x->x, y->y, z->y maps xyxyx to xyyx.
  Identity goal = parse_identity("xyxyx=xyyx");
  Derivation d = bounded_derivation(basis, goal);
  REQUIRE(d.status == DerivationStatus::derived);
  CHECK(d.steps.size() == 1);
  CHECK(d.steps[0].axiom == 0);
  CHECK_FALSE(d.steps[0].reversed);
  CHECK(replay(basis, goal, d.steps));
}

TEST_CASE("empty variable images are allowed") {
  AxiomSet basis = stylic_basis(2);
  // xyxzx=xyzx under x->x, y->empty, z->y maps xxyx to xyx.
  Identity goal = parse_identity("xxyx=xyx");
  Derivation d = bounded_derivation(basis, goal);
  REQUIRE(d.status == DerivationStatus::derived);
  CHECK(d.steps.size() == 1);
  CHECK(replay(basis, goal, d.steps));
}

TEST_CASE("a two-step derivation") {
  AxiomSet basis = stylic_basis(2);
  // xxyxx -> xyxx -> xyx; no single application can drop two letters here.
  Identity goal = parse_identity("xxyxx=xyx");
  Derivation d = bounded_derivation(basis, goal);
  REQUIRE(d.status == DerivationStatus::derived);
  CHECK(d.steps.size() == 2);
  CHECK(replay(basis, goal, d.steps));
}

TEST_CASE("axioms can be applied right to left") {
  AxiomSet basis = stylic_basis(2);
  Identity goal = parse_identity("xyx=xyxx");  // must grow the word
  Derivation d = bounded_derivation(basis, goal);
  REQUIRE(d.status == DerivationStatus::derived);
  REQUIRE(d.steps.size() == 1);
  CHECK(d.steps[0].reversed);
  CHECK(replay(basis, goal, d.steps));
}

TEST_CASE("each basis axiom derives from its own basis") {
  for (unsigned n : {2u, 3u}) {
    AxiomSet basis = stylic_basis(n);
    for (const Identity& id : basis.axioms) {
      Derivation d = bounded_derivation(basis, id);
      REQUIRE(d.status == DerivationStatus::derived);
      CHECK(d.steps.size() == 1);
      CHECK(replay(basis, id, d.steps));
    }
  }
}

TEST_CASE("variables absent from the matched side get enumerated images") {
  AxiomSet grow{{parse_identity("x=xy")}};
  Identity goal = parse_identity("x=xyy");
  Derivation d = bounded_derivation(grow, goal);
  REQUIRE(d.status == DerivationStatus::derived);
  CHECK(replay(grow, goal, d.steps));
}

TEST_CASE("underivable goals come back unknown, not wrong") {
  AxiomSet basis = stylic_basis(2);
  // Nothing 2-equivalent to xy except xy itself, so the search space is
  // exhausted almost immediately.
  Derivation d = bounded_derivation(basis, parse_identity("xy=yx"));
  CHECK(d.status == DerivationStatus::unknown);
  CHECK(d.explored >= 1);
}

TEST_CASE("a tiny step budget reports unknown") {
  AxiomSet basis = stylic_basis(2);
  Limits lim;
  lim.max_steps = 5;
  Derivation d = bounded_derivation(basis, parse_identity("xyxyxy=yxyxyx"),
                                    lim);
  CHECK(d.status == DerivationStatus::unknown);
}

TEST_CASE("derived goals really hold") {
  AxiomSet basis = stylic_basis(2);
  std::mt19937 rng(6021);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  std::uniform_int_distribution<letter_type> pick(0, 1);
  Limits lim;
  lim.max_steps = 4000;
  std::vector<Identity> goals{parse_identity("xyxyx=xyyx"),
                              parse_identity("xxyxy=yxxyx")};
  for (int trial = 0; trial < 40; ++trial) {
    Identity goal;
    goal.variables = 2;
    goal.lhs.resize(len(rng));
    goal.rhs.resize(len(rng));
    for (letter_type& a : goal.lhs) a = pick(rng);
    for (letter_type& a : goal.rhs) a = pick(rng);
    goals.push_back(goal);
  }
  unsigned derived_count = 0;
  for (const Identity& goal : goals) {
    Derivation d = bounded_derivation(basis, goal, lim);
    if (d.status != DerivationStatus::derived) continue;
    ++derived_count;
    CHECK(replay(basis, goal, d.steps));
    CHECK(holds_in_stylic(goal, 2));  // soundness of the axioms
  }
  CHECK(derived_count >= 1);
}

TEST_CASE("corrupted transcripts are rejected") {
  AxiomSet basis = stylic_basis(2);
  Identity goal = parse_identity("xxyx=xyx");
  Derivation d = bounded_derivation(basis, goal);
  REQUIRE(d.status == DerivationStatus::derived);
  REQUIRE(d.steps.size() == 1);

  DerivationStep bad = d.steps[0];
  bad.position = goal.lhs.size() + 3;  // beyond the word
  CHECK_THROWS_AS(apply_step(basis, goal.lhs, bad), input_error);

  bad = d.steps[0];
  bad.axiom = 99;
  CHECK_THROWS_AS(apply_step(basis, goal.lhs, bad), input_error);

  bad = d.steps[0];
  bad.substitution.pop_back();  // arity no longer matches the axiom
  CHECK_THROWS_AS(apply_step(basis, goal.lhs, bad), input_error);

  bad = d.steps[0];
  bad.substitution[0] = word_type{1, 1, 1};  // instance no longer matches
  CHECK_THROWS_AS(apply_step(basis, goal.lhs, bad), input_error);

  // A valid step sequence ending at the wrong word is a failed replay,
  // not an error.
  Identity other = parse_identity("xxyx=xyxx");
  CHECK_FALSE(replay(basis, other, d.steps));
}
