#include <doctest.h>

#include "stylic/enumerate.hpp"
#include "stylic/errors.hpp"
#include "stylic/presentation.hpp"

using namespace stylic;

TEST_CASE("rank-2 stylic table, frozen") {
  MonoidTable t = enumerate(stylic_presentation(2));
  CHECK(t.size == 5);
  CHECK(t.engine == "kb");
  std::vector<word_type> reps{{}, {0}, {1}, {0, 1}, {1, 0}};
  CHECK(t.representatives == reps);
  CHECK(t.generator_images == std::vector<std::size_t>{1, 2});
  // a1 . a2a1 = a1a2a1 = a2a1: left-multiplying the class of a2a1 by a1
  // keeps it fixed.
  CHECK(t.product(1, 4) == 4);
}

TEST_CASE("single idempotent generator gives the two-element monoid") {
  MonoidTable t = enumerate(Presentation{1, {{{0, 0}, {0}}}});
  CHECK(t.size == 2);
  CHECK(t.product(1, 1) == 1);
}

TEST_CASE("completion table equals the closure oracle on every preset") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Presentation& p : {stylic_presentation(n),
                                  kiselman_presentation(n),
                                  catalan_presentation(n)}) {
      MonoidTable kb = enumerate(p);
      MonoidTable oracle = brute_force_closure(p);
      CHECK(kb.engine == "kb");
      CHECK(oracle.engine == "closure");
      CHECK(kb == oracle);  // engine tag excluded from equality
    }
}

TEST_CASE("enumerated Catalan tables equal the transformation model") {
  for (unsigned n = 1; n <= 4; ++n) {
    MonoidTable fromrel = enumerate(catalan_presentation(n));
    MonoidTable model = catalan_transformation_monoid(n);
    CHECK(fromrel == model);
  }
}

TEST_CASE("source relations hold in every enumerated table") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Presentation& p : {stylic_presentation(n),
                                  kiselman_presentation(n),
                                  catalan_presentation(n)}) {
      MonoidTable t = enumerate(p);
      for (const auto& [lhs, rhs] : p.relations)
        CHECK(t.evaluate_word(lhs) == t.evaluate_word(rhs));
    }
}

TEST_CASE("sizes shrink along the quotient chain") {
  std::vector<std::size_t> catalan_numbers{2, 5, 14, 42};
  for (unsigned n = 1; n <= 4; ++n) {
    std::size_t kis = enumerate(kiselman_presentation(n)).size;
    std::size_t sty = enumerate(stylic_presentation(n)).size;
    std::size_t cat = enumerate(catalan_presentation(n)).size;
    CHECK(kis >= sty);
    CHECK(sty >= cat);
    CHECK(cat == catalan_numbers[n - 1]);
  }
  CHECK(enumerate(kiselman_presentation(2)).size == 5);
  CHECK(enumerate(stylic_presentation(2)).size == 5);
}

TEST_CASE("the closure oracle refuses an infinite monoid") {
  Presentation free1{1, {}};
  Limits lim;
  lim.max_word_length = 3;  // bound 3 can never certify closure
  CHECK_THROWS_AS(brute_force_closure(free1, lim), resource_error);
}

TEST_CASE("element cap stops enumeration of runaway presentations") {
  Presentation free1{1, {}};
  Limits lim;
  lim.max_elements = 50;
  lim.max_word_length = 8;
  CHECK_THROWS_AS(enumerate(free1, lim), resource_error);
}

TEST_CASE("j-triviality of the enumerated presets") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Presentation& p : {stylic_presentation(n),
                                  kiselman_presentation(n),
                                  catalan_presentation(n)})
      CHECK(is_j_trivial(enumerate(p)));
}

TEST_CASE("a group is not j-trivial") {
  MonoidTable z2;
  z2.size = 2;
  z2.table = {0, 1, 1, 0};
  z2.generator_images = {1};
  z2.representatives = {{}, {0}};
  z2.engine = "import";
  z2.validate();
  CHECK_FALSE(is_j_trivial(z2));
}
