#include "gsg/canonical.hpp"

#include <algorithm>

#include "doctest.h"
#include "gsg/order.hpp"
#include "gsg/stops.hpp"
#include "gsg/text.hpp"
#include "support/generators.hpp"
#include "support/reduction.hpp"

using namespace gsg;
using gsg::testing::GenParams;
using gsg::testing::randomized_canonical;
using gsg::testing::Rng;

namespace {

Game worked_example(Engine& eng) { return parse_game(eng, "<-1, <E1|<E1|E2>> | <2|2>>"); }

}  // namespace

TEST_CASE("domination finder") {
  Engine eng;
  auto step = find_dominated(parse_game(eng, "<0, 1|E1>"));
  REQUIRE(step.has_value());
  CHECK(step->kind == StepKind::RemoveDominated);
  CHECK(step->side == Player::Left);
  CHECK(step->target == eng.number(0));

  CHECK_FALSE(find_dominated(eng.number(Score(1, 2))).has_value());
  CHECK_FALSE(find_dominated(parse_game(eng, "<0|0>")).has_value());

  SUBCASE("right-side domination removes the larger option") {
    auto right = find_dominated(parse_game(eng, "<E0|1, 2>"));
    REQUIRE(right.has_value());
    CHECK(right->side == Player::Right);
    CHECK(right->target == eng.number(2));
  }

  SUBCASE("applying the step removes exactly that option") {
    Game g = parse_game(eng, "<0, 1|E1>");
    CHECK(apply_reduction(g, *find_dominated(g)) == parse_game(eng, "<1|E1>"));
  }
}

TEST_CASE("reversibility finder on the cancelling pair") {
  Engine eng;
  Game s = eng.sum(eng.hat(1), eng.conjugate(eng.hat(1)));
  auto step = find_reversible(s);
  REQUIRE(step.has_value());
  CHECK(step->kind == StepKind::SubstituteLoneAtomic);
  CHECK(step->side == Player::Left);
  CHECK(step->atom == Score(0));
  Game after = apply_reduction(s, *step);
  CHECK(after == eng.make(Side::atom(0), Side::options({eng.hat(1)})));
}

TEST_CASE("reversibility finder on the worked example") {
  Engine eng;
  Game h = worked_example(eng);
  auto step = find_reversible(h);
  REQUIRE(step.has_value());
  CHECK(step->kind == StepKind::ReplaceAtomicReversible);
  CHECK(step->side == Player::Left);
  CHECK(step->target == parse_game(eng, "<E1|<E1|E2>>"));
  CHECK(step->atom == Score(1));
  CHECK(step->waiting == 0);
  CHECK(apply_reduction(h, *step) == parse_game(eng, "<-1, <E1|1> | <2|2>>"));
  CHECK_FALSE(find_reversible(eng.number(3)).has_value());
}

TEST_CASE("minimal waiting index") {
  Engine eng;
  CHECK(min_waiting_index(eng.number(Score(1, 2)), Score(1, 2)) == 0);
  CHECK(min_waiting_index(worked_example(eng), Score(1)) == 0);
  CHECK(min_waiting_index(eng.hat(2), Score(0)) == 0);
  // right-side mirror: least n with number + hat(n) above the game
  CHECK(min_waiting_index(eng.conjugate(eng.hat(2)), Score(0), Player::Right) == 0);
  CHECK(min_waiting_index(eng.hat(2), Score(0), Player::Right) == 2);
  // not reversible: no waiting count makes 5 - hat(n) fit under 0
  CHECK_THROWS_AS(min_waiting_index(eng.number(0), Score(5)), engine_error);
}

TEST_CASE("canonical form golden cases") {
  Engine eng;
  CHECK(canonical_form(worked_example(eng)) == parse_game(eng, "<-1, <E1|1> | <2|2>>"));
  CHECK(canonical_form(eng.number(Score(-2, 3))) == eng.number(Score(-2, 3)));
  CHECK(canonical_form(eng.sum(eng.hat(1), eng.conjugate(eng.hat(1)))) == eng.number(0));
}

TEST_CASE("waiting moves subtract like integers") {
  // hat counts add across sums, so the canonical form of a difference is the
  // waiting move of the difference; exercises replacements with nonzero
  // waiting indices on both sides.
  Engine eng;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      Game diff = eng.sum(eng.hat(a), eng.conjugate(eng.hat(b)));
      Game expected = a >= b ? eng.hat(a - b) : eng.conjugate(eng.hat(b - a));
      CHECK(canonical_form(diff) == expected);
    }
  }
  Game translated = eng.sum(eng.number(1), eng.sum(eng.conjugate(eng.hat(2)), eng.hat(1)));
  CHECK(canonical_form(translated) == parse_game(eng, "<E1|1>"));
}

TEST_CASE("reduced-form predicate") {
  Engine eng;
  CHECK(is_reduced(eng.number(Score(1, 2))));
  CHECK_FALSE(is_reduced(parse_game(eng, "<0, 1|E1>")));
  CHECK(is_reduced(parse_game(eng, "<-1, <E1|1> | <2|2>>")));
  // reducible option buried inside an otherwise reduced game
  CHECK_FALSE(is_reduced(parse_game(eng, "<<0, 1|E1>|E2>")));
  CHECK(is_reduced(canonical_form(parse_game(eng, "<<0, 1|E1>|E2>"))));
}

TEST_CASE("every produced step preserves the value and the universe") {
  Engine eng;
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    for (const ReductionStep& step : reduction_steps(g)) {
      Game next = apply_reduction(g, step);
      CHECK(is_guaranteed(next));
      CHECK(compare(next, g).order() == Order::Equivalent);
    }
  }
}

TEST_CASE("fabricated steps are rejected") {
  Engine eng;
  ReductionStep bogus{StepKind::RemoveDominated, Player::Left, eng.number(7), eng.number(7), Score{}, 0};
  CHECK_THROWS_AS(apply_reduction(parse_game(eng, "<0, 1|E1>"), bogus), engine_error);
  CHECK_THROWS_AS(apply_reduction(eng.number(0), bogus), engine_error);
}

TEST_CASE("canonicalization: idempotent, equivalent, confluent, no deeper trees") {
  Engine eng;
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng, GenParams{.max_birthday = 3});
    Game r = canonical_form(g);
    CHECK(compare(r, g).order() == Order::Equivalent);
    CHECK(canonical_form(r) == r);
    CHECK(is_reduced(r));
    CHECK(birthday(r) <= birthday(g));
    CHECK(randomized_canonical(eng, g, rng) == r);
  }
}

TEST_CASE("exhaustive class consistency on the small corpus") {
  // Every guaranteed game with birthday <= 1, single options, atoms in
  // {-1,0,1}: pairwise, equivalence must coincide with identical forms.
  Engine eng;
  auto corpus = enumerate_guaranteed(eng, {1, {Score(-1), Score(0), Score(1)}, 1, 100000});
  REQUIRE(corpus.size() == 62);
  std::vector<Game> forms;
  for (Game g : corpus) {
    Game r = canonical_form(g);
    CHECK(is_reduced(r));
    CHECK(compare(r, g).order() == Order::Equivalent);
    forms.push_back(r);
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      bool same_class = compare(corpus[i], corpus[j]).order() == Order::Equivalent;
      CHECK(same_class == (forms[i] == forms[j]));
    }
  }
}

TEST_CASE("equivalent games share one canonical form") {
  Engine eng;
  Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    Game h = gsg::testing::random_guaranteed(eng, rng);
    CHECK((compare(g, h).order() == Order::Equivalent) == (canonical_form(g) == canonical_form(h)));
    // translation by a number is invertible, so forms match after shifting
    Game shifted = eng.sum(g, eng.number(2));
    CHECK(canonical_form(shifted) == canonical_form(eng.sum(canonical_form(g), eng.number(2))));
  }
}

TEST_CASE("canonicalization commutes with sums and preserves the order") {
  Engine eng;
  Rng rng(46);
  for (int i = 0; i < 40; ++i) {
    Game a = gsg::testing::random_guaranteed(eng, rng);
    Game b = gsg::testing::random_guaranteed(eng, rng);
    CHECK(canonical_form(eng.sum(a, b)) ==
          canonical_form(eng.sum(canonical_form(a), canonical_form(b))));
    CHECK(ge(a, b) == ge(canonical_form(a), canonical_form(b)));
  }
}

TEST_CASE("an extra option never hurts its owner") {
  Engine eng;
  Rng rng(44);
  int checked = 0;
  for (int attempt = 0; attempt < 5000 && checked < 60; ++attempt) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    if (g.left_is_atom()) continue;
    Game extra = gsg::testing::random_guaranteed(eng, rng);
    auto opts = g.left_options();
    opts.push_back(extra);
    Game widened = eng.make(Side::options(std::move(opts)),
                            g.right_is_atom() ? Side::atom(g.right_atom())
                                              : Side::options(g.right_options()));
    if (!is_guaranteed(widened)) continue;
    CHECK(ge(widened, g));
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("nobody profits from moving to an atomic-reversible option") {
  Engine eng;
  Rng rng(45);
  int checked = 0;
  for (int attempt = 0; attempt < 5000 && checked < 40; ++attempt) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    Game x = gsg::testing::random_guaranteed(eng, rng);
    if (x.left_is_atom()) continue;
    for (Game a : g.left_options()) {
      for (Game b : a.right_options()) {
        if (!b.left_is_atom() || !ge(g, b)) continue;
        // a is atomic-reversible: some Left move in x does at least as well
        Score lhs = right_stop(eng.sum(a, x));
        bool exists = false;
        for (Game xl : x.left_options()) {
          if (lhs <= right_stop(eng.sum(g, xl))) {
            exists = true;
            break;
          }
        }
        CHECK(exists);
        ++checked;
      }
    }
  }
  CHECK(checked >= 40);
}

TEST_CASE("invertibility") {
  Engine eng;
  for (long long l = -2; l <= 2; ++l) {
    for (long long r = l; r <= 2; ++r) {
      Game g = eng.make(Side::atom(Score(l)), Side::atom(Score(r)));
      CHECK(invertible(g) == (l == r));
    }
  }
  CHECK_FALSE(invertible(parse_game(eng, "<<-1|1>|0>")));
  for (int n = 0; n <= 4; ++n) {
    Game h = eng.hat(n);
    CHECK(invertible(h));
    REQUIRE(inverse(h).has_value());
    CHECK(*inverse(h) == eng.conjugate(h));
  }
  CHECK_FALSE(inverse(parse_game(eng, "<E0|E1>")).has_value());
}
