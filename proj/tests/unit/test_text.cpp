#include "gsg/text.hpp"

#include "doctest.h"
#include "support/generators.hpp"

using namespace gsg;
using gsg::testing::GenParams;
using gsg::testing::Rng;

TEST_CASE("parsing values") {
  Engine eng;
  CHECK(parse_game(eng, "0") == eng.number(0));
  CHECK(parse_game(eng, "-5/10") == eng.number(Score(-1, 2)));
  CHECK(parse_game(eng, "0.25") == eng.number(Score(1, 4)));
  CHECK(parse_game(eng, "-1.5") == eng.number(Score(-3, 2)));
  CHECK(parse_game(eng, "<0|E0>") == eng.hat(1));
  CHECK(parse_game(eng, " < 0 , 1 | E1 > ") == parse_game(eng, "<0,1|E1>"));

  Game h = parse_game(eng, "<E1 | 4, <E3 | 3, <E5|4>>>");
  CHECK(h.left_is_atom());
  CHECK(h.left_atom() == Score(1));
  CHECK(h.right_count() == 2);
}

TEST_CASE("parse errors carry a position") {
  Engine eng;
  CHECK_THROWS_AS(parse_game(eng, "<0|"), parse_error);
  CHECK_THROWS_AS(parse_game(eng, "1/0"), parse_error);
  CHECK_THROWS_AS(parse_game(eng, "<E1, 2|0>"), parse_error);
  CHECK_THROWS_AS(parse_game(eng, "<0|0> junk"), parse_error);
  CHECK_THROWS_AS(parse_game(eng, "hello"), parse_error);
  try {
    parse_game(eng, "<E1, 2|0>");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("literal formatting") {
  Engine eng;
  CHECK(format_game(eng.number(Score(1, 2))) == "1/2");
  CHECK(format_game(parse_game(eng, "<E-1|E1>")) == "<E-1|E1>");
  CHECK(format_game(eng.hat(2)) == "<<0|E0>|E0>");
  CHECK(format_score(Score(-7, 4)) == "-7/4");
}

TEST_CASE("pretty formatting renders recognized shapes") {
  Engine eng;
  CHECK(format_game(eng.hat(2), FormatStyle::Pretty) == "^2");
  CHECK(format_game(eng.conjugate(eng.hat(3)), FormatStyle::Pretty) == "-^3");
  Game translated = eng.sum(eng.number(1), eng.conjugate(eng.hat(1)));
  CHECK(format_game(translated, FormatStyle::Pretty) == "1-^1");
  CHECK(format_game(eng.sum(eng.number(Score(1, 2)), eng.hat(2)), FormatStyle::Pretty) == "1/2+^2");
  CHECK(format_game(parse_game(eng, "<-1, <E1|1> | <2|2>>"), FormatStyle::Pretty) ==
        "<-1, 1-^1|<2|2>>");
  CHECK(format_game(eng.number(3), FormatStyle::Pretty) == "3");
}

TEST_CASE("literal text round-trips") {
  Engine eng;
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    Game g = gsg::testing::random_tree(
        eng, rng, GenParams{.scores = {Score(-2), Score(-1, 2), Score(0), Score(1), Score(7, 3)}}, 3);
    CHECK(parse_game(eng, format_game(g)) == g);
  }
}

TEST_CASE("score parsing rejects trailing input") {
  CHECK(parse_score("3/9") == Score(1, 3));
  CHECK_THROWS_AS(parse_score("1 2"), parse_error);
  CHECK_THROWS_AS(parse_score(""), parse_error);
}
