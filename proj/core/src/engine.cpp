#include "gsg/game.hpp"

#include <algorithm>

#include "engine_impl.hpp"

namespace gsg {

using Impl = Engine::Impl;

// ---------------------------------------------------------------------------
// Interning

bool Impl::same_content(NodeId a, NodeId b) const {
  const Node &na = nodes[a], &nb = nodes[b];
  auto side_eq = [](const SideRep& x, const SideRep& y) {
    if (x.atom != y.atom) return false;
    return x.atom ? x.score == y.score : x.opts == y.opts;
  };
  return side_eq(na.left, nb.left) && side_eq(na.right, nb.right);
}

NodeId Impl::intern(Node&& n) {
  nodes.push_back(std::move(n));
  NodeId id = static_cast<NodeId>(nodes.size() - 1);
  auto [it, inserted] = interner.insert(id);
  if (!inserted) {
    nodes.pop_back();
    return *it;
  }
  return id;
}

static std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

NodeId Impl::make(SideRep left, SideRep right) {
  auto normalize = [this](SideRep& s) {
    if (s.atom) {
      s.opts.clear();
      return;
    }
    std::sort(s.opts.begin(), s.opts.end(), [this](NodeId a, NodeId b) { return cmp(a, b) < 0; });
    s.opts.erase(std::unique(s.opts.begin(), s.opts.end()), s.opts.end());
    if (s.opts.empty()) throw engine_error("option side with no options");
  };
  normalize(left);
  normalize(right);

  Node n;
  n.left = std::move(left);
  n.right = std::move(right);

  std::int32_t b = 0;
  bool guaranteed = true;
  auto scan = [&](const SideRep& s) {
    for (NodeId o : s.opts) {
      b = std::max(b, node(o).birthday + 1);
      guaranteed = guaranteed && node(o).guaranteed;
    }
  };
  scan(n.left);
  scan(n.right);
  n.birthday = b;

  auto side_min = [this](const SideRep& s) {
    if (s.atom) return s.score;
    Score m = node(s.opts[0]).min_atom;
    for (std::size_t i = 1; i < s.opts.size(); ++i) m = std::min(m, node(s.opts[i]).min_atom);
    return m;
  };
  auto side_max = [this](const SideRep& s) {
    if (s.atom) return s.score;
    Score m = node(s.opts[0]).max_atom;
    for (std::size_t i = 1; i < s.opts.size(); ++i) m = std::max(m, node(s.opts[i]).max_atom);
    return m;
  };
  n.min_atom = std::min(side_min(n.left), side_min(n.right));
  n.max_atom = std::max(side_max(n.left), side_max(n.right));

  // Per-node membership condition: at an atomic position every atom under
  // the Left side must be <= every atom under the Right side.
  if (n.left.atom) guaranteed = guaranteed && n.left.score <= side_min(n.right);
  if (n.right.atom) guaranteed = guaranteed && side_max(n.left) <= n.right.score;
  n.guaranteed = guaranteed;

  std::size_t h = 0x5c3f9e1d;
  auto hash_side = [&](const SideRep& s) {
    h = mix(h, s.atom ? 0x61 : 0x6f);
    if (s.atom) {
      h = mix(h, std::hash<Score>{}(s.score));
    } else {
      for (NodeId o : s.opts) h = mix(h, node(o).hash + 0x101);
    }
  };
  hash_side(n.left);
  hash_side(n.right);
  n.hash = h;

  return intern(std::move(n));
}

int Impl::cmp_side(const SideRep& a, const SideRep& b) const {
  if (a.atom != b.atom) return a.atom ? -1 : 1;
  if (a.atom) {
    if (a.score < b.score) return -1;
    if (b.score < a.score) return 1;
    return 0;
  }
  std::size_t n = std::min(a.opts.size(), b.opts.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = cmp(a.opts[i], b.opts[i])) return c;
  }
  if (a.opts.size() != b.opts.size()) return a.opts.size() < b.opts.size() ? -1 : 1;
  return 0;
}

int Impl::cmp(NodeId a, NodeId b) const {
  if (a == b) return 0;
  const Node &na = node(a), &nb = node(b);
  if (int c = cmp_side(na.left, nb.left)) return c;
  return cmp_side(na.right, nb.right);
}

// ---------------------------------------------------------------------------
// Construction

NodeId Impl::number(const Score& s) {
  SideRep l, r;
  l.score = s;
  r.score = s;
  return make(std::move(l), std::move(r));
}

NodeId Impl::hat(int n) {
  if (n < 0) throw std::invalid_argument("waiting-move index must be nonnegative");
  if (hat_chain.empty()) hat_chain.push_back(number(Score(0)));
  while (static_cast<int>(hat_chain.size()) <= n) {
    SideRep l, r;
    l.atom = false;
    l.opts = {hat_chain.back()};
    r.score = Score(0);
    hat_chain.push_back(make(std::move(l), std::move(r)));
  }
  return hat_chain[static_cast<std::size_t>(n)];
}

NodeId Impl::conj(NodeId g) {
  if (auto it = conj_cache.find(g); it != conj_cache.end()) return it->second;
  auto flip = [this](const SideRep& s) {
    SideRep out;
    if (s.atom) {
      out.score = -s.score;
    } else {
      out.atom = false;
      out.opts.reserve(s.opts.size());
      for (NodeId o : s.opts) out.opts.push_back(conj(o));
    }
    return out;
  };
  NodeId result = make(flip(node(g).right), flip(node(g).left));
  conj_cache.emplace(g, result);
  return result;
}

NodeId Impl::sum(NodeId a, NodeId b) {
  std::uint64_t key = pack(std::min(a, b), std::max(a, b));
  if (auto it = sum_cache.find(key); it != sum_cache.end()) return it->second;

  const Node &na = node(a), &nb = node(b);
  auto combine = [&](const SideRep& sa, const SideRep& sb) {
    SideRep out;
    if (sa.atom && sb.atom) {
      out.score = sa.score + sb.score;
      return out;
    }
    // A move on this side is a move in exactly one component; an ended
    // (atom) component simply contributes no options.
    out.atom = false;
    out.opts.reserve(sa.opts.size() + sb.opts.size());
    for (NodeId o : sa.opts) out.opts.push_back(sum(o, b));
    for (NodeId o : sb.opts) out.opts.push_back(sum(a, o));
    return out;
  };
  NodeId result = make(combine(na.left, nb.left), combine(na.right, nb.right));
  sum_cache.emplace(key, result);
  return result;
}

NodeId Impl::embed(const NormalPlayTree& t) {
  auto embed_side = [this](const std::vector<NormalPlayTree>& opts) {
    SideRep out;
    if (opts.empty()) {
      out.score = Score(0);
      return out;
    }
    out.atom = false;
    out.opts.reserve(opts.size());
    for (const auto& o : opts) out.opts.push_back(embed(o));
    return out;
  };
  return make(embed_side(t.left), embed_side(t.right));
}

NodeId Impl::project(NodeId g, const Score& x) {
  auto key = std::make_pair(g, x);
  if (auto it = projection_cache.find(key); it != projection_cache.end()) return it->second;
  auto map_side = [&](const SideRep& s) {
    SideRep out;
    if (s.atom) {
      out.score = x;
    } else {
      out.atom = false;
      out.opts.reserve(s.opts.size());
      for (NodeId o : s.opts) out.opts.push_back(project(o, x));
    }
    return out;
  };
  NodeId result = make(map_side(node(g).left), map_side(node(g).right));
  projection_cache.emplace(key, result);
  return result;
}

bool Impl::atom_order_ok(NodeId g) const {
  const Node& n = node(g);
  if (!n.left.atom && !n.right.atom) return true;
  auto side_min = [this](const SideRep& s) {
    if (s.atom) return s.score;
    Score m = node(s.opts[0]).min_atom;
    for (std::size_t i = 1; i < s.opts.size(); ++i) m = std::min(m, node(s.opts[i]).min_atom);
    return m;
  };
  auto side_max = [this](const SideRep& s) {
    if (s.atom) return s.score;
    Score m = node(s.opts[0]).max_atom;
    for (std::size_t i = 1; i < s.opts.size(); ++i) m = std::max(m, node(s.opts[i]).max_atom);
    return m;
  };
  return side_max(n.left) <= side_min(n.right);
}

std::optional<NodeId> Impl::bad_follower(NodeId g) const {
  if (node(g).guaranteed) return std::nullopt;
  if (!atom_order_ok(g)) return g;
  for (NodeId o : node(g).left.opts) {
    if (auto w = bad_follower(o)) return w;
  }
  for (NodeId o : node(g).right.opts) {
    if (auto w = bad_follower(o)) return w;
  }
  throw engine_error("non-guaranteed game without a failing follower");
}

void Impl::require_guaranteed(NodeId g) const {
  if (!node(g).guaranteed) throw not_guaranteed_error("operation requires a guaranteed game");
}

// ---------------------------------------------------------------------------
// Public surface

Engine::Engine() : impl_(std::make_unique<Impl>(this)) {}
Engine::~Engine() = default;

Game Engine::make(const Side& left, const Side& right) {
  Impl& I = *impl_;
  std::lock_guard lock(I.mu);
  auto to_rep = [&](const Side& s) {
    Impl::SideRep rep;
    if (s.is_atom()) {
      rep.score = s.atom_value();
    } else {
      rep.atom = false;
      rep.opts.reserve(s.games().size());
      for (const Game& g : s.games()) {
        if (!g.is_valid()) throw engine_error("operation on a default-constructed game handle");
        if (&g.engine() != this) throw engine_error("game values from different engines must not be mixed");
        rep.opts.push_back(g.id());
      }
    }
    return rep;
  };
  return I.wrap(I.make(to_rep(left), to_rep(right)));
}

Game Engine::number(const Score& s) {
  Impl& I = *impl_;
  std::lock_guard lock(I.mu);
  return I.wrap(I.number(s));
}

Game Engine::hat(int n) {
  Impl& I = *impl_;
  std::lock_guard lock(I.mu);
  return I.wrap(I.hat(n));
}

Game Engine::conjugate(Game g) {
  Impl& I = detail::Access::impl(g);
  if (&I != impl_.get()) throw engine_error("game values from different engines must not be mixed");
  std::lock_guard lock(I.mu);
  return I.wrap(I.conj(g.id()));
}

Game Engine::sum(Game a, Game b) {
  Impl& I = detail::Access::impl(a, b);
  if (&I != impl_.get()) throw engine_error("game values from different engines must not be mixed");
  std::lock_guard lock(I.mu);
  return I.wrap(I.sum(a.id(), b.id()));
}

Game Engine::embed_normal_play(const NormalPlayTree& t) {
  Impl& I = *impl_;
  std::lock_guard lock(I.mu);
  return I.wrap(I.embed(t));
}

std::size_t Engine::node_count() const {
  Impl& I = *impl_;
  std::lock_guard lock(I.mu);
  return I.nodes.size();
}

Engine& Game::engine() const {
  if (engine_ == nullptr) throw engine_error("operation on a default-constructed game handle");
  return *engine_;
}

bool Game::left_is_atom() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  return I.node(id_).left.atom;
}

bool Game::right_is_atom() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  return I.node(id_).right.atom;
}

bool Game::is_atomic() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  const Impl::Node& n = I.node(id_);
  return n.left.atom || n.right.atom;
}

bool Game::is_purely_atomic() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  const Impl::Node& n = I.node(id_);
  return n.left.atom && n.right.atom;
}

Score Game::left_atom() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  const Impl::Node& n = I.node(id_);
  if (!n.left.atom) throw engine_error("left side is not an atom");
  return n.left.score;
}

Score Game::right_atom() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  const Impl::Node& n = I.node(id_);
  if (!n.right.atom) throw engine_error("right side is not an atom");
  return n.right.score;
}

std::size_t Game::left_count() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  return I.node(id_).left.opts.size();
}

std::size_t Game::right_count() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  return I.node(id_).right.opts.size();
}

Game Game::left_option(std::size_t i) const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  return I.wrap(I.node(id_).left.opts.at(i));
}

Game Game::right_option(std::size_t i) const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  return I.wrap(I.node(id_).right.opts.at(i));
}

std::vector<Game> Game::left_options() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  std::vector<Game> out;
  for (NodeId o : I.node(id_).left.opts) out.push_back(I.wrap(o));
  return out;
}

std::vector<Game> Game::right_options() const {
  Impl& I = detail::Access::impl(*this);
  std::lock_guard lock(I.mu);
  std::vector<Game> out;
  for (NodeId o : I.node(id_).right.opts) out.push_back(I.wrap(o));
  return out;
}

int birthday(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  return I.node(g.id()).birthday;
}

bool is_guaranteed(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  return I.node(g.id()).guaranteed;
}

std::optional<Game> non_guaranteed_witness(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  auto w = I.bad_follower(g.id());
  if (!w) return std::nullopt;
  return I.wrap(*w);
}

Projections projections(Game g) {
  Impl& I = detail::Access::impl(g);
  std::lock_guard lock(I.mu);
  const Impl::Node& n = I.node(g.id());
  Projections p{n.min_atom, n.max_atom, std::max(abs(n.min_atom), abs(n.max_atom)),
                I.wrap(I.project(g.id(), n.min_atom)), I.wrap(I.project(g.id(), n.max_atom))};
  return p;
}

int structural_compare(Game a, Game b) {
  Impl& I = detail::Access::impl(a, b);
  std::lock_guard lock(I.mu);
  return I.cmp(a.id(), b.id());
}

}  // namespace gsg
