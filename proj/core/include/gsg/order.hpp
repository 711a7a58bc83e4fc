#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsg/game.hpp"
#include "gsg/rational.hpp"

namespace gsg {

// G >= H holds when G is at least as good as H for Left in every disjunctive
// context. Decided by the finite recursive criterion: pass-allowed stop
// comparisons at the root plus the two option conditions, memoized on the
// interned pair. Requires both games guaranteed.
bool ge(Game g, Game h);

inline bool le(Game g, Game h) { return ge(h, g); }

enum class Order { GreaterEq, LessEq, Equivalent, Incomparable };

struct Comparison {
  bool greater_eq = false;
  bool less_eq = false;
  Order order() const {
    if (greater_eq && less_eq) return Order::Equivalent;
    if (greater_eq) return Order::GreaterEq;
    if (less_eq) return Order::LessEq;
    return Order::Incomparable;
  }
};

Comparison compare(Game g, Game h);

inline bool equivalent(Game g, Game h) { return compare(g, h).order() == Order::Equivalent; }

// G is linked to H when some context T gives Ls(G+T) < 0 < Rs(H+T).
// Decided through the option characterization (no search over T).
bool linked(Game g, Game h);

// conjugate(G) plus a wide purely-atomic component forcing strict stop
// bounds: Ls(G + adjoint(G,r,s)) < -r and Rs(G + adjoint(G,r,s)) > s.
// Requires r, s >= 0.
Game adjoint(Game g, const Score& r, const Score& s);

// Recursive criterion equivalent to G >= number(s).
bool left_s_protected(Game g, const Score& s);

// Exhaustive-enumeration controls shared by the corpus builder and the
// comparison oracle. Option sets are capped at max_width per side; the cap
// bounds the number of candidate side pairs examined.
struct EnumerationLimits {
  int max_birthday = 1;
  std::vector<Score> scores;
  int max_width = 1;
  std::size_t cap = 4'000'000;
};

// Every guaranteed game with birthday <= max_birthday, atoms drawn from
// `scores`, and at most max_width options per side, sorted by birthday and
// then canonical structural order. Throws when the cap is exceeded.
std::vector<Game> enumerate_guaranteed(Engine& engine, const EnumerationLimits& limits);

// Brute-force refuter for ge built directly on the defining quantifier:
// returns the first enumerated X with Ls(G+X) < Ls(H+X) or Rs(G+X) < Rs(H+X),
// or nullopt when no enumerated context tells the games apart. A witness
// proves not-ge; absence of one is only heuristic confirmation.
std::optional<Game> oracle_ge(Game g, Game h, const EnumerationLimits& limits);

}  // namespace gsg
