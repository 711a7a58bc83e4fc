#pragma once

#include <optional>
#include <vector>

#include "gsg/game.hpp"
#include "gsg/rational.hpp"

namespace gsg {

// One admissible simplification at the root of a game. Applied to a
// guaranteed game, every step yields a guaranteed game equivalent to it.
enum class StepKind {
  RemoveDominated,          // drop an option another sibling dominates
  BypassReversible,         // splice a reversing option's replacement set in
  DropAtomicReversible,     // drop an atomic-reversible option; another
                            // option already attains the pass-allowed stop
  ReplaceAtomicReversible,  // rewrite the unique attaining option as a
                            // score-with-waiting-moves game
  SubstituteLoneAtomic,     // collapse a lone normalized option to an atom
};

struct ReductionStep {
  StepKind kind;
  Player side;
  Game target;      // the option removed, bypassed, or replaced
  Game detail;      // reversing option, or the dominating sibling
  Score atom{};     // atom score of the reversing option (atomic kinds)
  int waiting = 0;  // minimal waiting-move index n (replace/substitute)
};

// First removable dominated option in scan order (Left side before Right,
// options in canonical order), or nullopt. Equal siblings count: the
// canonically first of an equivalent group is kept.
std::optional<ReductionStep> find_dominated(Game g);

// First applicable reversibility step in scan order: bypasses with nonempty
// replacement sets on both sides first, then the atomic-reversible cases.
std::optional<ReductionStep> find_reversible(Game g);

// Every admissible root step, in the same deterministic scan order.
std::vector<ReductionStep> reduction_steps(Game g);

// Applies a step previously produced for this exact game. Validates that the
// step still fits the structure and that the result is guaranteed.
Game apply_reduction(Game g, const ReductionStep& step);

// Least n >= 0 such that g >= atom - hat(n) (side Left) or
// g <= atom + hat(n) (side Right). The search is capped just past the
// existence bound; running beyond it signals a caller bug.
int min_waiting_index(Game g, const Score& atom, Player side = Player::Left);

// Unique reduced representative of g's equivalence class: canonicalize all
// options bottom-up, then apply reduction steps until none fits. Memoized.
Game canonical_form(Game g);

// True when no reduction applies to g or to any follower of g.
bool is_reduced(Game g);

// A game is invertible exactly when its conjugate cancels it; zugzwang games
// (left stop below right stop) are rejected without computing the sum.
bool invertible(Game g);

// conjugate(g) when invertible, nullopt otherwise.
std::optional<Game> inverse(Game g);

}  // namespace gsg
