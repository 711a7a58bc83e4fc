#include "gsg/pickends.hpp"

#include <map>
#include <tuple>

#include "engine_impl.hpp"

namespace gsg::pickends {

std::vector<Position> moves(const Position& p, Player player) {
  std::vector<Position> out;
  if (p.pieces.empty()) return out;
  auto take = [&](std::size_t index) {
    Position next;
    next.pieces.reserve(p.pieces.size() - 1);
    for (std::size_t i = 0; i < p.pieces.size(); ++i) {
      if (i != index) next.pieces.push_back(p.pieces[i]);
    }
    Score v = p.pieces[index];
    next.accumulated = player == Player::Left ? p.accumulated + v : p.accumulated - v;
    out.push_back(std::move(next));
  };
  take(0);
  if (p.pieces.size() > 1) take(p.pieces.size() - 1);
  return out;
}

namespace {

// Positions reachable from one root share piece windows; key by the window
// plus the accumulated score so equal states convert once.
struct Converter {
  Engine& engine;
  const std::vector<Score>& pieces;
  std::map<std::tuple<std::size_t, std::size_t, Score>, Game> memo;

  Game run(std::size_t begin, std::size_t end, const Score& acc) {
    if (begin == end) return engine.number(acc);
    auto key = std::make_tuple(begin, end, acc);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<Game> left, right;
    left.push_back(run(begin + 1, end, acc + pieces[begin]));
    right.push_back(run(begin + 1, end, acc - pieces[begin]));
    if (end - begin > 1) {
      left.push_back(run(begin, end - 1, acc + pieces[end - 1]));
      right.push_back(run(begin, end - 1, acc - pieces[end - 1]));
    }
    Game g = engine.make(Side::options(std::move(left)), Side::options(std::move(right)));
    memo.emplace(key, g);
    return g;
  }
};

}  // namespace

Game to_game(Engine& engine, const Position& p) {
  Converter conv{engine, p.pieces, {}};
  Game g = conv.run(0, p.pieces.size(), p.accumulated);
  if (!is_guaranteed(g)) throw engine_error("ruleset produced a non-guaranteed game");
  return g;
}

}  // namespace gsg::pickends
