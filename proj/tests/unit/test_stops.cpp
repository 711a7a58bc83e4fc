#include "gsg/stops.hpp"

#include "doctest.h"
#include "gsg/text.hpp"
#include "support/generators.hpp"
#include "support/naive.hpp"

using namespace gsg;
using gsg::testing::GenParams;
using gsg::testing::Rng;

TEST_CASE("stops of simple games") {
  Engine eng;
  CHECK(left_stop(eng.number(Score(2, 3))) == Score(2, 3));
  CHECK(right_stop(eng.number(Score(2, 3))) == Score(2, 3));
  CHECK(left_stop(parse_game(eng, "<1|0>")) == Score(1));
  CHECK(right_stop(parse_game(eng, "<1|0>")) == Score(0));
  CHECK(left_stop(parse_game(eng, "<E1|2>")) == Score(1));
  CHECK(right_stop(parse_game(eng, "<E1|2>")) == Score(2));
}

TEST_CASE("the left stop of <-1|2> follows the recursion, not intuition") {
  // Left's only move is to the number -1, so the Left stop is -1.
  Engine eng;
  CHECK(left_stop(parse_game(eng, "<-1|2>")) == Score(-1));
}

TEST_CASE("stops agree with the plain-tree recursion") {
  Engine eng;
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    Game g = gsg::testing::random_tree(eng, rng, GenParams{.max_birthday = 3}, 3);
    auto t = gsg::testing::lift(g);
    CHECK(left_stop(g) == gsg::testing::naive_ls(t));
    CHECK(right_stop(g) == gsg::testing::naive_rs(t));
  }
}

TEST_CASE("pass-allowed stops of simple games") {
  Engine eng;
  CHECK(under_left_stop(eng.number(Score(1, 2))) == Score(1, 2));
  CHECK(under_left_stop(parse_game(eng, "<1|0>")) == Score(1));
  CHECK(pass_stop(eng.number(4), StopKind{Player::Right, PassRule::None}) == Score(4));

  // a left-ended game: Left to move must end it at once, passes or not
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    Game inner = gsg::testing::random_guaranteed(eng, rng);
    Score h = projections(inner).min_score - Score(1);
    Game g = eng.make(Side::atom(h), Side::options({inner}));
    REQUIRE(is_guaranteed(g));
    CHECK(under_left_stop(g) == h);
  }
}

TEST_CASE("pass stops reject non-guaranteed input") {
  Engine eng;
  Game bad = parse_game(eng, "<E1 | 4, <E3 | 3, <E5|4>>>");
  CHECK_THROWS_AS(under_left_stop(bad), not_guaranteed_error);
  CHECK_THROWS_AS(pass_stop(bad, StopKind{Player::Left, PassRule::None}), not_guaranteed_error);
}

TEST_CASE("stop attainment: some option realizes each stop") {
  Engine eng;
  Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng, GenParams{.max_birthday = 3});
    if (!g.left_is_atom()) {
      bool attained = false;
      for (Game o : g.left_options()) {
        CHECK(left_stop(g) >= right_stop(o));
        attained = attained || left_stop(g) == right_stop(o);
      }
      CHECK(attained);
    }
    if (!g.right_is_atom()) {
      bool attained = false;
      for (Game o : g.right_options()) {
        CHECK(right_stop(g) <= left_stop(o));
        attained = attained || right_stop(g) == left_stop(o);
      }
      CHECK(attained);
    }
  }
}

TEST_CASE("number translation shifts stops") {
  Engine eng;
  Rng rng(24);
  std::vector<Score> pool{Score(-1), Score(1, 2), Score(2)};
  for (int i = 0; i < 150; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    Score s = gsg::testing::pick_score(rng, pool);
    CHECK(left_stop(eng.sum(g, eng.number(s))) == left_stop(g) + s);
    CHECK(right_stop(eng.sum(g, eng.number(s))) == right_stop(g) + s);
  }
}

TEST_CASE("waiting-move counts stabilize") {
  // Opponent-pass stops settle at the birthday; own-pass stops need one
  // more (the passer may have to hand the turn over first).
  Engine eng;
  Rng rng(25);
  for (int i = 0; i < 60; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    int b = birthday(g);
    Score uls = under_left_stop(g), ols = over_left_stop(g);
    Score urs = under_right_stop(g), ors = over_right_stop(g);
    for (int n = b; n <= b + 4; ++n) {
      Game give_right = eng.sum(g, eng.conjugate(eng.hat(n)));
      Game give_left = eng.sum(g, eng.hat(n));
      CHECK(left_stop(give_right) == uls);
      CHECK(right_stop(give_left) == ors);
      if (n > b) {
        CHECK(left_stop(give_left) == ols);
        CHECK(right_stop(give_right) == urs);
      }
    }
  }
  // the motivating example: one Left pass flips who must end <E0|E1>
  Game g = parse_game(eng, "<E0|E1>");
  CHECK(over_left_stop(g) == Score(1));
  CHECK(under_right_stop(g) == Score(0));
  CHECK(left_stop(eng.sum(g, eng.hat(0))) == Score(0));
}

TEST_CASE("passing can only help the passer") {
  Engine eng;
  Rng rng(26);
  for (int i = 0; i < 150; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng, GenParams{.max_birthday = 3});
    CHECK(under_left_stop(g) <= left_stop(g));
    CHECK(left_stop(g) <= over_left_stop(g));
    CHECK(under_right_stop(g) <= right_stop(g));
    CHECK(right_stop(g) <= over_right_stop(g));
  }
}

TEST_CASE("pass-allowed stops of sums obey the component bounds") {
  Engine eng;
  Rng rng(27);
  for (int i = 0; i < 80; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    Game h = gsg::testing::random_guaranteed(eng, rng);
    Game s = eng.sum(g, h);
    CHECK(under_left_stop(g) + under_right_stop(h) <= under_left_stop(s));
    CHECK(under_left_stop(s) <= under_left_stop(g) + under_left_stop(h));
    CHECK(over_right_stop(g) + over_right_stop(h) <= over_right_stop(s));
    CHECK(over_right_stop(s) <= over_right_stop(g) + over_left_stop(h));
  }
}

namespace {

// Direct minimax with explicit pass budgets: an independent route to the
// pass-allowed stops that never builds waiting-move components.
Score budget_stop(Game g, Player to_move, int left_passes, int right_passes) {
  bool atom_side = to_move == Player::Left ? g.left_is_atom() : g.right_is_atom();
  int budget = to_move == Player::Left ? left_passes : right_passes;
  if (atom_side && budget == 0) {
    return to_move == Player::Left ? g.left_atom() : g.right_atom();
  }
  std::optional<Score> best;
  auto consider = [&](Score v) {
    if (!best || (to_move == Player::Left ? v > *best : v < *best)) best = v;
  };
  for (Game o : g.options(to_move)) {
    consider(budget_stop(o, opponent(to_move), left_passes, right_passes));
  }
  if (budget > 0) {
    int lp = left_passes - (to_move == Player::Left ? 1 : 0);
    int rp = right_passes - (to_move == Player::Right ? 1 : 0);
    consider(budget_stop(g, opponent(to_move), lp, rp));
  }
  return *best;
}

}  // namespace

TEST_CASE("pass-allowed stops equal the explicit pass-budget minimax") {
  Engine eng;
  Rng rng(29);
  for (int i = 0; i < 80; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng);
    int b = birthday(g);
    // defining extremum over budgets, scanned far enough to have settled
    Score uls = budget_stop(g, Player::Left, 0, 0);
    Score ols = uls, urs = budget_stop(g, Player::Right, 0, 0), ors = urs;
    for (int k = 1; k <= b + 2; ++k) {
      uls = std::min(uls, budget_stop(g, Player::Left, 0, k));
      ols = std::max(ols, budget_stop(g, Player::Left, k, 0));
      urs = std::min(urs, budget_stop(g, Player::Right, 0, k));
      ors = std::max(ors, budget_stop(g, Player::Right, k, 0));
    }
    CHECK(under_left_stop(g) == uls);
    CHECK(over_left_stop(g) == ols);
    CHECK(under_right_stop(g) == urs);
    CHECK(over_right_stop(g) == ors);
    // the extremum is already reached at the stabilization budgets
    CHECK(budget_stop(g, Player::Left, 0, b) == uls);
    CHECK(budget_stop(g, Player::Right, b, 0) == ors);
    CHECK(budget_stop(g, Player::Left, b + 1, 0) == ols);
    CHECK(budget_stop(g, Player::Right, 0, b + 1) == urs);
  }
}

TEST_CASE("own-pass stops of non-number atoms exceed the atom score") {
  // The mover's own pass budget matters even with no moves on the board:
  // passing once hands the ending to the opponent.
  Engine eng;
  Game g = parse_game(eng, "<E0|E1>");
  CHECK(under_left_stop(g) == Score(0));
  CHECK(over_right_stop(g) == Score(1));
  CHECK(over_left_stop(g) == Score(1));
  CHECK(under_right_stop(g) == Score(0));
}

TEST_CASE("the pass-allowed left stop is attained through some option") {
  Engine eng;
  Rng rng(28);
  for (int i = 0; i < 150; ++i) {
    Game g = gsg::testing::random_guaranteed(eng, rng, GenParams{.max_birthday = 3});
    if (g.left_is_atom()) continue;
    Score best = under_right_stop(g.left_option(0));
    for (Game o : g.left_options()) best = std::max(best, under_right_stop(o));
    CHECK(under_left_stop(g) == best);
  }
}
