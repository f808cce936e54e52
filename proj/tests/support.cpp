#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "sfvs/rng.hpp"

namespace sfvs::testing {

std::vector<Triangle> brute_triangles(const Instance& inst) {
  const Graph& g = inst.graph();
  const VertexSet vs = g.vertices();
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t l = j + 1; l < vs.size(); ++l) {
        const Vertex a = vs[i], b = vs[j], c = vs[l];
        if (!g.adjacent(a, b) || !g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        if (inst.is_terminal(a) || inst.is_terminal(b) || inst.is_terminal(c)) out.push_back({a, b, c});
      }
  return out;
}

bool has_chordless_cycle(const Graph& g) {
  const VertexSet vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    VertexSet sub;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) sub.push_back(vs[i]);
    bool all_two = true;
    for (Vertex v : sub) {
      int d = 0;
      for (Vertex w : sub) d += g.adjacent(v, w) ? 1 : 0;
      all_two = all_two && d == 2;
    }
    if (!all_two) continue;
    // A 2-regular induced subgraph is a union of cycles; one component suffices.
    VertexSet seen{sub[0]};
    std::vector<Vertex> stack{sub[0]};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : sub)
        if (g.adjacent(v, w) && !set_contains(seen, w)) {
          set_insert(seen, w);
          stack.push_back(w);
        }
    }
    if (seen.size() == sub.size()) return true;
  }
  return false;
}

std::vector<VertexSet> minimum_vertex_covers(const BipartiteGraph& f) {
  VertexSet all = set_union(make_set(f.left), make_set(f.right));
  const int n = static_cast<int>(all.size());
  std::vector<VertexSet> best;
  int best_size = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > best_size) continue;
    VertexSet cover;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) cover.push_back(all[i]);
    bool ok = true;
    for (auto [a, b] : f.edges) ok = ok && (set_contains(cover, a) || set_contains(cover, b));
    if (!ok) continue;
    if (size < best_size) {
      best_size = size;
      best.clear();
    }
    best.push_back(cover);
  }
  return best;
}

std::string check_dm_clauses(const BipartiteGraph& f, const DMResult& dm) {
  const VertexSet all = set_union(make_set(f.left), make_set(f.right));
  if (set_union(set_union(dm.c, dm.h), dm.r) != all) return "parts do not cover V(F)";
  if (dm.c.size() + dm.h.size() + dm.r.size() != all.size()) return "parts overlap";
  VertexSet nc;
  for (auto [a, b] : f.edges) {
    if (set_contains(dm.c, a) && set_contains(dm.c, b)) return "C is not independent";
    if (set_contains(dm.c, a)) set_insert(nc, b);
    if (set_contains(dm.c, b)) set_insert(nc, a);
  }
  if (nc != dm.h) return "H differs from N(C)";
  VertexSet matched;
  for (auto [a, b] : dm.matching) {
    const bool ra = set_contains(dm.r, a), rb = set_contains(dm.r, b);
    if (ra != rb) return "matching edge leaves R";
    set_insert(matched, a);
    set_insert(matched, b);
  }
  if (!set_includes(matched, set_union(dm.r, dm.h))) return "witness does not saturate R and H";
  return "";
}

Instance random_split_terminal_side(std::uint64_t seed, int n_clique, int n_indep, double edge_prob,
                                    double mark_prob, int k) {
  Rng rng(seed);
  Instance inst(n_clique + n_indep, k);
  for (Vertex a = 0; a < n_clique; ++a)
    for (Vertex b = a + 1; b < n_clique; ++b) inst.add_edge(a, b);
  for (Vertex t = n_clique; t < n_clique + n_indep; ++t) {
    inst.set_terminal(t, true);
    for (Vertex c = 0; c < n_clique; ++c)
      if (rng.chance(edge_prob)) inst.add_edge(t, c, rng.chance(mark_prob));
  }
  inst.clear_history();
  return inst;
}

BipartiteGraph random_bipartite(std::uint64_t seed, int side_max, double p) {
  Rng rng(seed);
  BipartiteGraph f;
  const int l = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(side_max)));
  const int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(side_max)));
  for (int i = 0; i < l; ++i) f.left.push_back(i);
  for (int j = 0; j < r; ++j) f.right.push_back(l + j);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j)
      if (rng.chance(p)) f.edges.push_back({i, l + j});
  return f;
}

} // namespace sfvs::testing
