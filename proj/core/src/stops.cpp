#include "gsg/stops.hpp"

#include <algorithm>

#include "engine_impl.hpp"

namespace gsg {

using Impl = Engine::Impl;

Score Impl::ls(NodeId g) {
  if (auto it = ls_cache.find(g); it != ls_cache.end()) return it->second;
  const Node& n = node(g);
  Score v;
  if (n.left.atom) {
    v = n.left.score;
  } else {
    v = rs(n.left.opts[0]);
    for (std::size_t i = 1; i < n.left.opts.size(); ++i) v = std::max(v, rs(n.left.opts[i]));
  }
  ls_cache.emplace(g, v);
  return v;
}

Score Impl::rs(NodeId g) {
  if (auto it = rs_cache.find(g); it != rs_cache.end()) return it->second;
  const Node& n = node(g);
  Score v;
  if (n.right.atom) {
    v = n.right.score;
  } else {
    v = ls(n.right.opts[0]);
    for (std::size_t i = 1; i < n.right.opts.size(); ++i) v = std::min(v, ls(n.right.opts[i]));
  }
  rs_cache.emplace(g, v);
  return v;
}

static int pass_index(StopKind k) {
  int i = k.side == Player::Left ? 0 : 1;
  if (k.passer == PassRule::LeftPasses) i += 2;
  return i;
}

// Waiting-move counts stabilise, so a single stop evaluation at the
// stabilization count gives the pass-allowed value. When the opponent of the
// scored mover passes, the birthday of the game is enough. When the scored
// mover holds the passes, one extra is needed to hand the turn over:
// already for <E0|E1> the Left stop with Left passing is 1, reached only
// from one waiting move on.
Score Impl::pass(NodeId g, StopKind kind) {
  if (kind.passer == PassRule::None) return kind.side == Player::Left ? ls(g) : rs(g);
  auto& cache = pass_cache[static_cast<std::size_t>(pass_index(kind))];
  if (auto it = cache.find(g); it != cache.end()) return it->second;
  bool own_pass = (kind.side == Player::Left) == (kind.passer == PassRule::LeftPasses);
  int n = node(g).birthday + (own_pass ? 1 : 0);
  NodeId waits = kind.passer == PassRule::LeftPasses ? hat(n) : conj(hat(n));
  NodeId s = sum(g, waits);
  Score v = kind.side == Player::Left ? ls(s) : rs(s);
  cache.emplace(g, v);
  return v;
}

Score left_stop(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  return I.ls(g.id());
}

Score right_stop(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  return I.rs(g.id());
}

Score pass_stop(Game g, StopKind kind) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.pass(g.id(), kind);
}

Score under_left_stop(Game g) { return pass_stop(g, {Player::Left, PassRule::RightPasses}); }
Score over_left_stop(Game g) { return pass_stop(g, {Player::Left, PassRule::LeftPasses}); }
Score under_right_stop(Game g) { return pass_stop(g, {Player::Right, PassRule::RightPasses}); }
Score over_right_stop(Game g) { return pass_stop(g, {Player::Right, PassRule::LeftPasses}); }

}  // namespace gsg
