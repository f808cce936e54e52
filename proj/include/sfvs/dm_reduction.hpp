#pragma once

#include "sfvs/graph.hpp"
#include "sfvs/matching.hpp"

namespace sfvs {

struct AuxiliaryBipartite {
  // Independent-side vertices with at least one edge, all of them marked.
  VertexSet a;
  // N(a)
  VertexSet b;
  BipartiteGraph f;
};

// Dead ids in independent_side are ignored.
AuxiliaryBipartite build_auxiliary(const Instance& inst, const VertexSet& independent_side);

struct DmReduction {
  bool changed = false;
  // Deleted without entering the solution (the A-side part).
  VertexSet discarded;
  // Deleted into the solution (the B-side part); k fell by its size.
  VertexSet committed;
  int rounds = 0;
  UndoToken token = 0;
};

// Applies the DM reduction until it no longer applies.
DmReduction dm_reduce(Instance& inst, const VertexSet& independent_side);

// Whether one round of the reduction would change anything.
bool dm_applicable(const Instance& inst, const VertexSet& independent_side);

} // namespace sfvs
