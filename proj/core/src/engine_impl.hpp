#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gsg/canonical.hpp"
#include "gsg/game.hpp"
#include "gsg/order.hpp"
#include "gsg/rational.hpp"
#include "gsg/stops.hpp"

namespace gsg {

using NodeId = std::uint32_t;

// All engine state lives here. Public entry points take the (recursive)
// engine lock and then work on NodeIds; Impl methods never lock themselves.
// Nodes are immutable once interned and the node table is a deque, so
// references stay valid while recursion interns further nodes.
struct Engine::Impl {
  struct SideRep {
    bool atom = true;
    Score score{};               // meaningful when atom
    std::vector<NodeId> opts;    // sorted by cmp(), deduplicated, nonempty when !atom
  };

  struct Node {
    SideRep left, right;
    std::int32_t birthday = 0;
    Score min_atom{}, max_atom{};  // over all atoms anywhere in the tree
    bool guaranteed = true;
    std::size_t hash = 0;
  };

  struct NodeHash {
    Impl* impl;
    std::size_t operator()(NodeId id) const { return impl->nodes[id].hash; }
  };
  struct NodeEq {
    Impl* impl;
    bool operator()(NodeId a, NodeId b) const { return impl->same_content(a, b); }
  };

  explicit Impl(Engine* owner)
      : self(owner), interner(64, NodeHash{this}, NodeEq{this}) {}

  Engine* self;
  mutable std::recursive_mutex mu;

  std::deque<Node> nodes;
  std::unordered_set<NodeId, NodeHash, NodeEq> interner;

  std::vector<NodeId> hat_chain;
  std::unordered_map<std::uint64_t, NodeId> sum_cache;
  std::unordered_map<NodeId, NodeId> conj_cache;
  std::unordered_map<NodeId, Score> ls_cache, rs_cache;
  std::array<std::unordered_map<NodeId, Score>, 4> pass_cache;
  std::unordered_map<std::uint64_t, bool> ge_cache;
  std::unordered_map<NodeId, NodeId> canon_cache;
  std::unordered_map<NodeId, bool> reduced_cache;
  std::map<std::pair<NodeId, Score>, NodeId> projection_cache;
  std::map<std::pair<NodeId, Score>, bool> protected_cache;

  // --- representation ------------------------------------------------
  const Node& node(NodeId id) const { return nodes[id]; }
  Game wrap(NodeId id) const { return Game(self, id); }
  bool same_content(NodeId a, NodeId b) const;
  static std::uint64_t pack(NodeId a, NodeId b) {
    return (std::uint64_t(a) << 32) | std::uint64_t(b);
  }

  NodeId intern(Node&& n);
  NodeId make(SideRep left, SideRep right);
  int cmp(NodeId a, NodeId b) const;
  int cmp_side(const SideRep& a, const SideRep& b) const;

  NodeId number(const Score& s);
  NodeId hat(int n);
  NodeId conj(NodeId g);
  NodeId sum(NodeId a, NodeId b);
  NodeId embed(const NormalPlayTree& t);
  NodeId project(NodeId g, const Score& x);
  std::optional<NodeId> bad_follower(NodeId g) const;
  bool atom_order_ok(NodeId g) const;  // this node's own atomic-side condition

  const SideRep& side(NodeId g, Player p) const {
    return p == Player::Left ? node(g).left : node(g).right;
  }

  void require_guaranteed(NodeId g) const;

  // --- stops ----------------------------------------------------------
  Score ls(NodeId g);
  Score rs(NodeId g);
  Score pass(NodeId g, StopKind kind);
  Score under_ls(NodeId g) { return pass(g, {Player::Left, PassRule::RightPasses}); }
  Score over_ls(NodeId g) { return pass(g, {Player::Left, PassRule::LeftPasses}); }
  Score under_rs(NodeId g) { return pass(g, {Player::Right, PassRule::RightPasses}); }
  Score over_rs(NodeId g) { return pass(g, {Player::Right, PassRule::LeftPasses}); }

  // --- order ----------------------------------------------------------
  bool ge(NodeId a, NodeId b);
  bool linked(NodeId g, NodeId h);
  NodeId adjoint(NodeId g, const Score& r, const Score& s);
  bool left_protected(NodeId g, const Score& s);
  std::vector<NodeId> enumerate(const EnumerationLimits& limits);
  std::optional<NodeId> oracle(NodeId g, NodeId h, const EnumerationLimits& limits);

  // --- canonical form --------------------------------------------------
  void collect_dominated(NodeId g, bool first_only, std::vector<ReductionStep>& out);
  void collect_reversible(NodeId g, bool first_only, std::vector<ReductionStep>& out);
  NodeId apply_step(NodeId g, const ReductionStep& step);
  int min_wait(NodeId g, const Score& atom, Player side);
  NodeId translated_hat(const Score& s, int n, Player side);
  NodeId canon(NodeId g);
  bool reduced(NodeId g);
  bool invertible(NodeId g);
};

namespace detail {

struct Access {
  static Engine::Impl& impl(Engine& e) { return *e.impl_; }
  static Engine::Impl& impl(const Game& g) {
    if (!g.is_valid()) throw engine_error("operation on a default-constructed game handle");
    return *g.engine().impl_;
  }
  // For binary operations: both handles must come from the same engine.
  static Engine::Impl& impl(const Game& a, const Game& b) {
    Engine::Impl& ia = impl(a);
    if (&ia != &impl(b)) throw engine_error("game values from different engines must not be mixed");
    return ia;
  }
  static Game wrap(Engine& e, NodeId id) { return Game(&e, id); }
};

}  // namespace detail
}  // namespace gsg
