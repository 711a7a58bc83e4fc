#pragma once

#include "gsg/game.hpp"
#include "gsg/rational.hpp"

namespace gsg {

enum class PassRule { None, LeftPasses, RightPasses };

// Which stop to compute and who, if anybody, holds unlimited waiting moves.
// The four passer-augmented combinations are the pass-allowed stops; the
// "under" forms let Right pass, the "over" forms let Left pass.
struct StopKind {
  Player side;
  PassRule passer;
};

// Alternating-play stops. Defined for any well-formed value.
Score left_stop(Game g);
Score right_stop(Game g);

// Pass-allowed stop dispatcher. Requires a guaranteed game; with
// PassRule::None it degenerates to the plain stop. Waiting-move counts
// stabilise at the birthday of the game, which is the count used here.
Score pass_stop(Game g, StopKind kind);

Score under_left_stop(Game g);   // Right may pass
Score over_left_stop(Game g);    // Left may pass
Score under_right_stop(Game g);  // Right may pass
Score over_right_stop(Game g);   // Left may pass

}  // namespace gsg
