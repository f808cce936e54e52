#include "sfvs/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "sfvs/chordal_solver.hpp"
#include "sfvs/rng.hpp"

namespace sfvs {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_prob(double p, const char* what) { require(p >= 0.0 && p <= 1.0, what); }

// Adds `count` vertices, each joined to a clique inside the closed
// neighbourhood of a random vertex of `pool`. New vertices join the pool.
void grow(Instance& inst, Rng& rng, int count, VertexSet& pool, double density) {
  for (int i = 0; i < count; ++i) {
    const Vertex v = inst.add_vertex();
    if (!pool.empty()) {
      const Vertex u = pool[rng.below(pool.size())];
      VertexSet clique{u};
      for (Vertex w : inst.graph().neighbors(u)) {
        if (!set_contains(pool, w) || !rng.chance(density)) continue;
        bool fits = true;
        for (Vertex c : clique) fits = fits && inst.graph().adjacent(c, w);
        if (fits) set_insert(clique, w);
      }
      for (Vertex c : clique) inst.add_edge(v, c);
    }
    set_insert(pool, v);
  }
}

// Terminal coin per vertex of `free_vertices`, then a mark coin per edge
// with both ends in it, in ascending order.
void decorate(Instance& inst, Rng& rng, const VertexSet& free_vertices, double terminal_prob, double mark_prob) {
  for (Vertex v : free_vertices)
    if (rng.chance(terminal_prob)) inst.set_terminal(v, true);
  for (auto [a, b] : inst.graph().edges())
    if (set_contains(free_vertices, a) && set_contains(free_vertices, b) && rng.chance(mark_prob)) inst.mark(a, b);
}

void add_clique(Instance& inst, const VertexSet& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!inst.graph().adjacent(c[i], c[j])) inst.add_edge(c[i], c[j]);
}

// A spine clique through `attach` with two or three private terminals, each
// adjacent to a different three-vertex part of the spine. Such a side
// survives the local simplifications.
void bulb(Instance& inst, Rng& rng, const VertexSet& attach, double mark_prob) {
  VertexSet spine = attach;
  const int size = 4 + static_cast<int>(rng.below(2));
  while (static_cast<int>(spine.size()) < size) set_insert(spine, inst.add_vertex());
  add_clique(inst, spine);
  const int terminals = 2 + static_cast<int>(rng.below(2));
  std::vector<VertexSet> used;
  for (int i = 0; i < terminals * 4 && static_cast<int>(used.size()) < terminals; ++i) {
    VertexSet part = spine;
    while (part.size() > 3) part.erase(part.begin() + static_cast<std::ptrdiff_t>(rng.below(part.size())));
    if (std::find(used.begin(), used.end(), part) != used.end()) continue;
    used.push_back(part);
    const Vertex t = inst.add_vertex(true);
    bool marked = false;
    for (Vertex x : part) {
      const bool mark = !marked && !set_contains(attach, x) && rng.chance(mark_prob);
      marked = marked || mark;
      inst.add_edge(t, x, mark);
    }
  }
}

// Two or three bulbs hanging off a shared separator of `width` vertices.
Instance bulbs(int width, const StructuredParams& p, Rng& rng) {
  Instance inst(width, p.k);
  VertexSet core;
  for (Vertex v = 0; v < width; ++v) core.push_back(v);
  add_clique(inst, core);
  const int count = 2 + static_cast<int>(rng.below(2));
  for (int i = 0; i < count; ++i) bulb(inst, rng, core, p.mark_prob);
  VertexSet pool = inst.graph().vertices();
  const VertexSet fixed = pool;
  grow(inst, rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(p.extra) + 1)), pool, p.density);
  decorate(inst, rng, set_difference(inst.graph().vertices(), fixed), p.terminal_prob, p.mark_prob);
  return inst;
}

// The shape reached by the last chordal branching: a maximal clique Q1 =
// {hat, v1..vl} meeting Q2 = {hat, v2..vl, u', u''} in the separator, with
// two simplicial terminals hanging off Q1. Random growth attaches to Q2's side.
Instance fish_core(const StructuredParams& p, Rng& rng) {
  const int l = 6 + static_cast<int>(rng.below(3));
  Instance inst(l + 5, p.k);
  const Vertex hat = 0, t1 = l + 1, t2 = l + 2, u1 = l + 3, u2 = l + 4;
  auto v = [](int i) { return static_cast<Vertex>(i); };
  VertexSet q1{hat}, q2{hat, u1, u2};
  for (int i = 1; i <= l; ++i) {
    q1.push_back(v(i));
    if (i >= 2) set_insert(q2, v(i));
  }
  add_clique(inst, q1);
  add_clique(inst, q2);
  for (int i : {1, 2, 3, 4}) inst.add_edge(t1, v(i));
  for (int i : {1, 4, l - 2})
    if (!inst.graph().adjacent(t2, v(i))) inst.add_edge(t2, v(i));
  inst.mark(hat, v(1));
  inst.mark(u2, v(4));
  for (Vertex t : {hat, t1, t2, v(l - 1), u1}) inst.set_terminal(t, true);

  VertexSet pool = set_difference(inst.graph().vertices(), make_set({v(1), t1, t2}));
  const VertexSet fixed = inst.graph().vertices();
  grow(inst, rng, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.extra) + 1)), pool, p.density);
  decorate(inst, rng, set_difference(inst.graph().vertices(), fixed), p.terminal_prob, p.mark_prob);
  return inst;
}

bool confirms(StructuredKind kind, const Instance& inst) {
  if (kind == StructuredKind::inner_terminal) return find_dividing_separator(inst).has_value();
  const SolveOutcome out = solve_chordal(inst);
  switch (kind) {
  case StructuredKind::fish:
    return out.stats.fired("chordal.step13") > 0;
  case StructuredKind::separator1:
    return out.stats.fired("chordal.step8.width1") > 0;
  case StructuredKind::separator2:
    return out.stats.fired("chordal.step8.width2") > 0;
  default:
    return false;
  }
}

} // namespace

Instance gen_chordal(int n, double extra_edge_density, double terminal_prob, double mark_prob, int k,
                     std::uint64_t seed) {
  require(n >= 1, "gen_chordal: n must be at least 1");
  require(k >= 0, "gen_chordal: k must be non-negative");
  require_prob(extra_edge_density, "gen_chordal: density must lie in [0, 1]");
  require_prob(terminal_prob, "gen_chordal: terminal probability must lie in [0, 1]");
  require_prob(mark_prob, "gen_chordal: mark probability must lie in [0, 1]");
  Rng rng(seed);
  Instance inst(0, k);
  VertexSet pool;
  grow(inst, rng, n, pool, extra_edge_density);
  decorate(inst, rng, inst.graph().vertices(), terminal_prob, mark_prob);
  inst.clear_history();
  return inst;
}

Instance gen_split(int n_clique, int n_indep, double edge_prob, double terminal_prob, double mark_prob, int k,
                   std::uint64_t seed) {
  require(n_clique >= 0 && n_indep >= 0, "gen_split: part sizes must be non-negative");
  require(k >= 0, "gen_split: k must be non-negative");
  require_prob(edge_prob, "gen_split: edge probability must lie in [0, 1]");
  require_prob(terminal_prob, "gen_split: terminal probability must lie in [0, 1]");
  require_prob(mark_prob, "gen_split: mark probability must lie in [0, 1]");
  Rng rng(seed);
  Instance inst(n_clique + n_indep, k);
  for (Vertex a = 0; a < n_clique; ++a)
    for (Vertex b = a + 1; b < n_clique; ++b) inst.add_edge(a, b);
  for (Vertex i = n_clique; i < n_clique + n_indep; ++i)
    for (Vertex c = 0; c < n_clique; ++c)
      if (rng.chance(edge_prob)) inst.add_edge(c, i);
  decorate(inst, rng, inst.graph().vertices(), terminal_prob, mark_prob);
  inst.clear_history();
  return inst;
}

StructuredKind parse_structured_kind(const std::string& name) {
  if (name == "fish") return StructuredKind::fish;
  if (name == "separator1") return StructuredKind::separator1;
  if (name == "separator2") return StructuredKind::separator2;
  if (name == "inner_terminal") return StructuredKind::inner_terminal;
  throw std::invalid_argument("unknown structured kind: " + name);
}

std::string to_string(StructuredKind kind) {
  switch (kind) {
  case StructuredKind::fish:
    return "fish";
  case StructuredKind::separator1:
    return "separator1";
  case StructuredKind::separator2:
    return "separator2";
  case StructuredKind::inner_terminal:
    return "inner_terminal";
  }
  return "?";
}

Instance gen_structured(StructuredKind kind, const StructuredParams& params, std::uint64_t seed) {
  require(params.extra >= 0, "gen_structured: extra must be non-negative");
  require(params.k >= 0, "gen_structured: k must be non-negative");
  require(params.attempts >= 1, "gen_structured: attempts must be positive");
  require_prob(params.density, "gen_structured: density must lie in [0, 1]");
  require_prob(params.terminal_prob, "gen_structured: terminal probability must lie in [0, 1]");
  require_prob(params.mark_prob, "gen_structured: mark probability must lie in [0, 1]");
  Rng outer(seed);
  for (int attempt = 0; attempt < params.attempts; ++attempt) {
    Rng rng(outer.next());
    Instance inst;
    switch (kind) {
    case StructuredKind::separator1:
      inst = bulbs(1, params, rng);
      break;
    case StructuredKind::separator2:
      inst = bulbs(2, params, rng);
      break;
    case StructuredKind::fish:
    case StructuredKind::inner_terminal:
      inst = fish_core(params, rng);
      break;
    }
    inst.clear_history();
    if (confirms(kind, inst)) return inst;
  }
  throw std::runtime_error("gen_structured: no " + to_string(kind) + " instance within the attempt limit");
}

} // namespace sfvs
