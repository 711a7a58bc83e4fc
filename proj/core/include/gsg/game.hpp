#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsg/rational.hpp"

namespace gsg {

class Engine;
class Game;
namespace detail {
struct Access;
}

enum class Player { Left, Right };

constexpr Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

// Thrown when an operation that is only defined on guaranteed games receives
// a value outside that universe.
class not_guaranteed_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Thrown on broken internal invariants and on misuse of engine handles
// (mixing engines, dangling/default handles, fabricated reduction steps).
class engine_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A handle to an interned game value. Handles are cheap to copy and compare;
// two handles from the same engine are == exactly when the underlying trees
// are structurally identical (same shape, same atoms in the same places).
class Game {
public:
  Game() = default;

  bool is_valid() const noexcept { return engine_ != nullptr; }
  Engine& engine() const;
  std::uint32_t id() const noexcept { return id_; }

  // Structure access. An atom side has no options; option lists are stored
  // deduplicated in the engine's canonical structural order.
  bool left_is_atom() const;
  bool right_is_atom() const;
  bool is_atomic() const;         // at most one player can move
  bool is_purely_atomic() const;  // nobody can move
  Score left_atom() const;        // pre: left_is_atom()
  Score right_atom() const;       // pre: right_is_atom()
  std::size_t left_count() const;
  std::size_t right_count() const;
  Game left_option(std::size_t i) const;
  Game right_option(std::size_t i) const;
  std::vector<Game> left_options() const;
  std::vector<Game> right_options() const;
  bool side_is_atom(Player p) const { return p == Player::Left ? left_is_atom() : right_is_atom(); }
  std::vector<Game> options(Player p) const { return p == Player::Left ? left_options() : right_options(); }

  friend bool operator==(const Game& a, const Game& b) = default;
  friend bool operator<(const Game& a, const Game& b) {
    return a.engine_ == b.engine_ ? a.id_ < b.id_ : a.engine_ < b.engine_;
  }

private:
  friend class Engine;
  friend struct detail::Access;
  Game(Engine* e, std::uint32_t id) : engine_(e), id_(id) {}

  Engine* engine_ = nullptr;
  std::uint32_t id_ = 0;
};

// One side of a game under construction: either an atom (the mover has no
// option and the game ends with this score) or a nonempty set of options.
class Side {
public:
  static Side atom(Score s) {
    Side x;
    x.is_atom_ = true;
    x.atom_ = std::move(s);
    return x;
  }
  static Side options(std::vector<Game> games) {
    if (games.empty()) throw std::invalid_argument("empty option set; an ended side must be an atom");
    Side x;
    x.is_atom_ = false;
    x.games_ = std::move(games);
    return x;
  }
  static Side options(std::initializer_list<Game> games) {
    return options(std::vector<Game>(games));
  }

  bool is_atom() const noexcept { return is_atom_; }
  const Score& atom_value() const { return atom_; }
  const std::vector<Game>& games() const { return games_; }

private:
  bool is_atom_ = true;
  Score atom_{};
  std::vector<Game> games_;
};

// Normal-play game tree: empty option lists simply mean "no move" (the player
// to move loses). Input type for the order embedding into scoring games.
struct NormalPlayTree {
  std::vector<NormalPlayTree> left;
  std::vector<NormalPlayTree> right;
};

struct Projections {
  Score min_score;      // least atom anywhere in the game
  Score max_score;      // greatest atom anywhere in the game
  Score abs_bound;      // max |t| over all atoms
  Game min_projection;  // the game with every atom replaced by min_score
  Game max_projection;  // every atom replaced by max_score
};

// Owns the interning table and every memo cache. All values constructed
// through one engine instance share structure; handles from different
// engines must never be mixed. All operations are deterministic pure
// functions of their arguments and are safe to call from several threads.
class Engine {
public:
  struct Impl;  // internal; defined in the implementation

  Engine();
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // Interning constructor: structurally equal inputs yield the same handle.
  // Option sets are deduplicated and stored in canonical structural order.
  Game make(const Side& left, const Side& right);

  // The number s, i.e. the game that ends immediately with score s.
  Game number(const Score& s);

  // Waiting moves: hat(0) is the number 0, hat(n) gives Left n pure tempo
  // moves with final score 0. Requires n >= 0.
  Game hat(int n);

  Game conjugate(Game g);
  Game sum(Game a, Game b);
  Game embed_normal_play(const NormalPlayTree& t);

  std::size_t node_count() const;

private:
  friend class Game;
  friend struct detail::Access;
  std::unique_ptr<Impl> impl_;
};

// Depth of the game tree.
int birthday(Game g);

// Membership in the guaranteed universe: every atomic follower has all atoms
// under its Left side <= all atoms under its Right side.
bool is_guaranteed(Game g);

// First atomic follower (depth-first, canonical option order) violating the
// guaranteed condition; nullopt when the game is guaranteed.
std::optional<Game> non_guaranteed_witness(Game g);

Projections projections(Game g);

// Canonical structural total order used for option storage: -1/0/+1.
// Atoms order before option sets, atoms compare by score, option sets
// lexicographically.
int structural_compare(Game a, Game b);

inline Game operator+(Game a, Game b) { return a.engine().sum(a, b); }
inline Game conj(Game g) { return g.engine().conjugate(g); }

}  // namespace gsg
