#include "gsg/order.hpp"

#include <algorithm>

#include "engine_impl.hpp"

namespace gsg {

using Impl = Engine::Impl;

// Finite comparison criterion. The recursion is well founded: every
// recursive pair strictly decreases the combined birthday.
bool Impl::ge(NodeId a, NodeId b) {
  std::uint64_t key = pack(a, b);
  if (auto it = ge_cache.find(key); it != ge_cache.end()) return it->second;

  bool result = true;
  if (under_ls(a) < under_ls(b) || over_rs(a) < over_rs(b)) {
    result = false;
  }
  if (result) {
    // Left may not gain by moving first in b: every Left option of b is
    // matched by a Left option of a, or reversed out through its own
    // Right responses.
    for (NodeId hl : node(b).left.opts) {
      bool matched = false;
      for (NodeId gl : node(a).left.opts) {
        if (ge(gl, hl)) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        for (NodeId hlr : node(hl).right.opts) {
          if (ge(a, hlr)) {
            matched = true;
            break;
          }
        }
      }
      if (!matched) {
        result = false;
        break;
      }
    }
  }
  if (result) {
    for (NodeId gr : node(a).right.opts) {
      bool matched = false;
      for (NodeId hr : node(b).right.opts) {
        if (ge(gr, hr)) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        for (NodeId grl : node(gr).left.opts) {
          if (ge(grl, b)) {
            matched = true;
            break;
          }
        }
      }
      if (!matched) {
        result = false;
        break;
      }
    }
  }
  ge_cache.emplace(key, result);
  return result;
}

bool Impl::linked(NodeId g, NodeId h) {
  for (NodeId gl : node(g).left.opts) {
    if (ge(gl, h)) return false;
  }
  for (NodeId hr : node(h).right.opts) {
    if (ge(g, hr)) return false;
  }
  return true;
}

NodeId Impl::adjoint(NodeId g, const Score& r, const Score& s) {
  Score m = std::max(abs(node(g).min_atom), abs(node(g).max_atom));
  SideRep lo, hi;
  lo.score = -m - r - Score(1);
  hi.score = m + s + Score(1);
  return sum(conj(g), make(std::move(lo), std::move(hi)));
}

bool Impl::left_protected(NodeId g, const Score& s) {
  auto key = std::make_pair(g, s);
  if (auto it = protected_cache.find(key); it != protected_cache.end()) return it->second;
  bool result = !(under_ls(g) < s);
  if (result && !node(g).right.atom) {
    for (NodeId gr : node(g).right.opts) {
      bool exists = false;
      for (NodeId grl : node(gr).left.opts) {
        if (left_protected(grl, s)) {
          exists = true;
          break;
        }
      }
      if (!exists) {  // a left-atomic Right option has no rescue move
        result = false;
        break;
      }
    }
  }
  protected_cache.emplace(key, result);
  return result;
}

std::vector<NodeId> Impl::enumerate(const EnumerationLimits& limits) {
  if (limits.scores.empty()) throw std::invalid_argument("enumeration needs a nonempty score set");
  if (limits.max_width < 1) throw std::invalid_argument("enumeration needs max_width >= 1");
  std::vector<Score> scores = limits.scores;
  std::sort(scores.begin(), scores.end());
  scores.erase(std::unique(scores.begin(), scores.end()), scores.end());

  std::vector<NodeId> all;
  std::unordered_set<NodeId> seen;
  auto push = [&](NodeId id) {
    if (node(id).guaranteed && seen.insert(id).second) all.push_back(id);
  };

  for (std::size_t i = 0; i < scores.size(); ++i) {
    for (std::size_t j = i; j < scores.size(); ++j) {
      SideRep l, r;
      l.score = scores[i];
      r.score = scores[j];
      push(make(std::move(l), std::move(r)));
    }
  }

  std::size_t candidates = scores.size() * scores.size();
  for (int depth = 1; depth <= limits.max_birthday; ++depth) {
    std::vector<NodeId> pool = all;  // everything born so far

    std::vector<SideRep> sides;
    for (const Score& s : scores) {
      SideRep rep;
      rep.score = s;
      sides.push_back(std::move(rep));
    }
    // Nonempty option subsets of the pool, up to max_width, in index order.
    std::vector<std::size_t> pick;
    auto emit = [&]() {
      SideRep rep;
      rep.atom = false;
      for (std::size_t k : pick) rep.opts.push_back(pool[k]);
      sides.push_back(std::move(rep));
    };
    auto grow = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t k = from; k < pool.size(); ++k) {
        pick.push_back(k);
        emit();
        if (static_cast<int>(pick.size()) < limits.max_width) self(self, k + 1);
        pick.pop_back();
      }
    };
    grow(grow, 0);

    candidates += sides.size() * sides.size();
    if (candidates > limits.cap) throw engine_error("enumeration exceeds the configured cap");

    for (const SideRep& l : sides) {
      for (const SideRep& r : sides) {
        push(make(SideRep(l), SideRep(r)));
      }
    }
  }

  std::sort(all.begin(), all.end(), [this](NodeId a, NodeId b) {
    if (node(a).birthday != node(b).birthday) return node(a).birthday < node(b).birthday;
    return cmp(a, b) < 0;
  });
  return all;
}

std::optional<NodeId> Impl::oracle(NodeId g, NodeId h, const EnumerationLimits& limits) {
  for (NodeId x : enumerate(limits)) {
    NodeId gx = sum(g, x);
    NodeId hx = sum(h, x);
    if (ls(gx) < ls(hx) || rs(gx) < rs(hx)) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Public surface

bool ge(Game g, Game h) {
  Impl& I = detail::Access::impl(g, h);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  I.require_guaranteed(h.id());
  return I.ge(g.id(), h.id());
}

Comparison compare(Game g, Game h) {
  Impl& I = detail::Access::impl(g, h);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  I.require_guaranteed(h.id());
  return Comparison{I.ge(g.id(), h.id()), I.ge(h.id(), g.id())};
}

bool linked(Game g, Game h) {
  Impl& I = detail::Access::impl(g, h);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  I.require_guaranteed(h.id());
  return I.linked(g.id(), h.id());
}

Game adjoint(Game g, const Score& r, const Score& s) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  if (r < Score(0) || s < Score(0)) throw std::invalid_argument("adjoint margins must be nonnegative");
  return I.wrap(I.adjoint(g.id(), r, s));
}

bool left_s_protected(Game g, const Score& s) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  return I.left_protected(g.id(), s);
}

std::vector<Game> enumerate_guaranteed(Engine& engine, const EnumerationLimits& limits) {
  Impl& I = detail::Access::impl(engine);
  std::lock_guard lock(I.mu);
  std::vector<Game> out;
  for (NodeId id : I.enumerate(limits)) out.push_back(I.wrap(id));
  return out;
}

std::optional<Game> oracle_ge(Game g, Game h, const EnumerationLimits& limits) {
  Impl& I = detail::Access::impl(g, h);
  std::lock_guard lock(I.mu);
  I.require_guaranteed(g.id());
  I.require_guaranteed(h.id());
  auto w = I.oracle(g.id(), h.id(), limits);
  if (!w) return std::nullopt;
  return I.wrap(*w);
}

}  // namespace gsg
