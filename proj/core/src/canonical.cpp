#include "gsg/canonical.hpp"

#include <algorithm>

#include "engine_impl.hpp"

namespace gsg {

using Impl = Engine::Impl;

namespace {
constexpr int kReductionStepCap = 100000;
}

void Impl::collect_dominated(NodeId g, bool first_only, std::vector<ReductionStep>& out) {
  for (Player p : {Player::Left, Player::Right}) {
    const SideRep& s = side(g, p);
    if (s.atom || s.opts.size() < 2) continue;
    for (std::size_t i = 0; i < s.opts.size(); ++i) {
      for (std::size_t j = 0; j < s.opts.size(); ++j) {
        if (j == i) continue;
        // Left keeps large options, Right keeps small ones.
        bool covered = p == Player::Left ? ge(s.opts[j], s.opts[i]) : ge(s.opts[i], s.opts[j]);
        if (!covered) continue;
        bool tie = p == Player::Left ? ge(s.opts[i], s.opts[j]) : ge(s.opts[j], s.opts[i]);
        if (tie && j > i) continue;  // equivalent pair: keep the canonically first
        out.push_back({StepKind::RemoveDominated, p, wrap(s.opts[i]), wrap(s.opts[j]), Score{}, 0});
        if (first_only) return;
        break;
      }
    }
  }
}

void Impl::collect_reversible(NodeId g, bool first_only, std::vector<ReductionStep>& out) {
  auto reversing = [&](Player p, NodeId b) {
    return p == Player::Left ? ge(g, b) : ge(b, g);
  };

  // Bypasses with a nonempty replacement set come first in scan order.
  for (Player p : {Player::Left, Player::Right}) {
    const SideRep& s = side(g, p);
    for (NodeId a : s.opts) {
      for (NodeId b : side(a, opponent(p)).opts) {
        if (!reversing(p, b)) continue;
        if (side(b, p).atom) continue;
        out.push_back({StepKind::BypassReversible, p, wrap(a), wrap(b), Score{}, 0});
        if (first_only) return;
      }
    }
  }

  for (Player p : {Player::Left, Player::Right}) {
    const SideRep& s = side(g, p);
    Score root_stop{};
    bool have_root = false;
    auto opt_stop = [&](NodeId c) { return p == Player::Left ? under_rs(c) : over_ls(c); };
    for (NodeId a : s.opts) {
      for (NodeId b : side(a, opponent(p)).opts) {
        const SideRep& reversed_out = side(b, p);
        if (!reversed_out.atom) continue;
        if (!reversing(p, b)) continue;
        Score ell = reversed_out.score;
        if (!have_root) {
          root_stop = p == Player::Left ? under_ls(g) : over_rs(g);
          have_root = true;
        }
        bool other_attains = false;
        for (NodeId c : s.opts) {
          if (c != a && opt_stop(c) == root_stop) {
            other_attains = true;
            break;
          }
        }
        if (other_attains) {
          out.push_back({StepKind::DropAtomicReversible, p, wrap(a), wrap(b), ell, 0});
          if (first_only) return;
          break;
        }
        if (opt_stop(a) != root_stop) {
          // The pass-allowed stop of a game with options is attained by one
          // of them; reaching this line means that identity broke down.
          throw engine_error("atomic-reversible option matches no reduction case");
        }
        int n = min_wait(g, ell, p);
        NodeId replacement = translated_hat(ell, n + 1, p);
        if (replacement != a) {
          out.push_back({StepKind::ReplaceAtomicReversible, p, wrap(a), wrap(b), ell, n});
          if (first_only) return;
          break;
        }
        // The lone already-normalized option collapses to an atom when the
        // collapsed game stays guaranteed.
        if (s.opts.size() == 1) {
          SideRep atom_side;
          atom_side.score = ell;
          NodeId collapsed = p == Player::Left ? make(std::move(atom_side), SideRep(node(g).right))
                                               : make(SideRep(node(g).left), std::move(atom_side));
          if (node(collapsed).guaranteed) {
            out.push_back({StepKind::SubstituteLoneAtomic, p, wrap(a), wrap(b), ell, n});
            if (first_only) return;
          }
        }
        break;
      }
    }
  }
}

int Impl::min_wait(NodeId g, const Score& atom, Player p) {
  int cap = node(g).birthday + 1;
  for (int n = 0; n <= cap; ++n) {
    NodeId target = translated_hat(atom, n, p);
    bool ok = p == Player::Left ? ge(g, target) : ge(target, g);
    if (ok) return n;
  }
  throw engine_error("waiting-move search ran past its bound; input is not reversible");
}

NodeId Impl::translated_hat(const Score& s, int n, Player p) {
  NodeId waits = p == Player::Left ? conj(hat(n)) : hat(n);
  return sum(number(s), waits);
}

NodeId Impl::apply_step(NodeId g, const ReductionStep& step) {
  Player p = step.side;
  SideRep s = side(g, p);
  if (s.atom) throw engine_error("reduction step targets an atom side");
  auto pos = std::find(s.opts.begin(), s.opts.end(), step.target.id());
  if (pos == s.opts.end()) throw engine_error("reduction step does not fit this game");
  if (step.kind == StepKind::RemoveDominated) {
    auto sibling = std::find(s.opts.begin(), s.opts.end(), step.detail.id());
    if (sibling == s.opts.end() || *sibling == step.target.id()) {
      throw engine_error("dominating sibling is not an option of this game");
    }
  } else {
    const SideRep& responses = side(step.target.id(), opponent(p));
    if (std::find(responses.opts.begin(), responses.opts.end(), step.detail.id()) ==
        responses.opts.end()) {
      throw engine_error("reversing option does not belong to the targeted option");
    }
  }

  SideRep other = side(g, opponent(p));
  switch (step.kind) {
    case StepKind::RemoveDominated:
    case StepKind::DropAtomicReversible:
      s.opts.erase(pos);
      break;
    case StepKind::BypassReversible: {
      s.opts.erase(pos);
      const SideRep& repl = side(step.detail.id(), p);
      s.opts.insert(s.opts.end(), repl.opts.begin(), repl.opts.end());
      break;
    }
    case StepKind::ReplaceAtomicReversible:
      *pos = translated_hat(step.atom, step.waiting + 1, p);
      break;
    case StepKind::SubstituteLoneAtomic:
      s = SideRep{};
      s.score = step.atom;
      break;
  }

  NodeId result = p == Player::Left ? make(std::move(s), std::move(other))
                                    : make(std::move(other), std::move(s));
  if (!node(result).guaranteed) throw engine_error("reduction produced a non-guaranteed game");
  return result;
}

NodeId Impl::canon(NodeId g) {
  if (auto it = canon_cache.find(g); it != canon_cache.end()) return it->second;

  const Node& n = node(g);
  NodeId cur = g;
  if (!n.left.atom || !n.right.atom) {
    auto canon_side = [&](const SideRep& s) {
      SideRep out;
      if (s.atom) {
        out.score = s.score;
        return out;
      }
      out.atom = false;
      out.opts.reserve(s.opts.size());
      for (NodeId o : s.opts) out.opts.push_back(canon(o));
      return out;
    };
    cur = make(canon_side(n.left), canon_side(n.right));
    for (int iter = 0;; ++iter) {
      if (iter > kReductionStepCap) throw engine_error("reduction loop failed to terminate");
      std::vector<ReductionStep> steps;
      collect_dominated(cur, true, steps);
      if (steps.empty()) collect_reversible(cur, true, steps);
      if (steps.empty()) break;
      cur = apply_step(cur, steps.front());
    }
  }
  canon_cache.emplace(g, cur);
  canon_cache.emplace(cur, cur);
  return cur;
}

bool Impl::reduced(NodeId g) {
  if (auto it = reduced_cache.find(g); it != reduced_cache.end()) return it->second;
  bool result = true;
  std::vector<ReductionStep> steps;
  collect_dominated(g, true, steps);
  if (steps.empty()) collect_reversible(g, true, steps);
  result = steps.empty();
  if (result) {
    for (NodeId o : node(g).left.opts) {
      if (!reduced(o)) {
        result = false;
        break;
      }
    }
  }
  if (result) {
    for (NodeId o : node(g).right.opts) {
      if (!reduced(o)) {
        result = false;
        break;
      }
    }
  }
  reduced_cache.emplace(g, result);
  return result;
}

bool Impl::invertible(NodeId g) {
  if (ls(g) < rs(g)) return false;  // zugzwang: moving only hurts, no inverse
  NodeId total = sum(g, conj(g));
  NodeId zero = number(Score(0));
  return ge(total, zero) && ge(zero, total);
}

// ---------------------------------------------------------------------------
// Public surface

std::optional<ReductionStep> find_dominated(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  std::vector<ReductionStep> steps;
  I.collect_dominated(g.id(), true, steps);
  if (steps.empty()) return std::nullopt;
  return steps.front();
}

std::optional<ReductionStep> find_reversible(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  std::vector<ReductionStep> steps;
  I.collect_reversible(g.id(), true, steps);
  if (steps.empty()) return std::nullopt;
  return steps.front();
}

std::vector<ReductionStep> reduction_steps(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  std::vector<ReductionStep> steps;
  I.collect_dominated(g.id(), false, steps);
  I.collect_reversible(g.id(), false, steps);
  return steps;
}

Game apply_reduction(Game g, const ReductionStep& step) {
  Impl& I = detail::Access::impl(g, step.target);
  detail::Access::impl(step.target, step.detail);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.wrap(I.apply_step(g.id(), step));
}

int min_waiting_index(Game g, const Score& atom, Player side) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.min_wait(g.id(), atom, side);
}

Game canonical_form(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.wrap(I.canon(g.id()));
}

bool is_reduced(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.reduced(g.id());
}

bool invertible(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.invertible(g.id());
}

std::optional<Game> inverse(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  if (!I.invertible(g.id())) return std::nullopt;
  return I.wrap(I.conj(g.id()));
}

}  // namespace gsg
