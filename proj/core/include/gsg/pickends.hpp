#pragma once

#include <vector>

#include "gsg/game.hpp"
#include "gsg/rational.hpp"

namespace gsg::pickends {

// A row of rational-valued pieces plus the score collected so far. Each
// player removes the first or last piece; Left adds its value to the
// accumulated score, Right subtracts it. Both players have moves at every
// nonempty position, so every converted game is guaranteed.
struct Position {
  std::vector<Score> pieces;
  Score accumulated{};
};

std::vector<Position> moves(const Position& p, Player player);

// Recursive conversion to a game value: the empty row is the number
// `accumulated`, otherwise both sides hold the converted successors.
// A non-guaranteed result signals a ruleset bug and throws engine_error.
Game to_game(Engine& engine, const Position& p);

}  // namespace gsg::pickends
