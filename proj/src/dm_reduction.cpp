#include "sfvs/dm_reduction.hpp"

namespace sfvs {

AuxiliaryBipartite build_auxiliary(const Instance& inst, const VertexSet& independent_side) {
  const Graph& g = inst.graph();
  AuxiliaryBipartite aux;
  for (Vertex x : independent_side) {
    if (!g.contains(x) || g.degree(x) == 0) continue;
    if (g.marked_neighbors(x).size() == g.neighbors(x).size()) aux.a.push_back(x);
  }
  for (Vertex x : aux.a) aux.b = set_union(aux.b, g.neighbors(x));
  aux.f.left = aux.a;
  aux.f.right = aux.b;
  for (Vertex x : aux.a)
    for (Vertex y : g.neighbors(x)) aux.f.edges.emplace_back(x, y);
  return aux;
}

namespace {

struct Round {
  VertexSet a_hat;
  VertexSet b_hat;
};

Round plan_round(const Instance& inst, const VertexSet& independent_side) {
  AuxiliaryBipartite aux = build_auxiliary(inst, independent_side);
  Round r;
  if (aux.a.empty()) return r;
  DMResult dm = dm_decompose(aux.f);
  VertexSet keep_a = set_union(dm.r, dm.c);
  VertexSet keep_b = set_union(dm.r, dm.h);
  r.a_hat = set_intersection(aux.a, keep_a);
  r.b_hat = set_intersection(aux.b, keep_b);
  if (r.a_hat.empty() || r.b_hat.empty()) return {};
  return r;
}

} // namespace

bool dm_applicable(const Instance& inst, const VertexSet& independent_side) {
  return !plan_round(inst, independent_side).a_hat.empty();
}

DmReduction dm_reduce(Instance& inst, const VertexSet& independent_side) {
  DmReduction out;
  out.token = inst.checkpoint();
  while (true) {
    Round r = plan_round(inst, independent_side);
    if (r.a_hat.empty()) break;
    out.changed = true;
    ++out.rounds;
    inst.delete_vertices(r.a_hat);
    inst.delete_vertices(r.b_hat);
    inst.adjust_budget(-static_cast<int>(r.b_hat.size()));
    out.discarded = set_union(out.discarded, r.a_hat);
    out.committed = set_union(out.committed, r.b_hat);
  }
  return out;
}

} // namespace sfvs
