#pragma once

#include <utility>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

struct BipartiteGraph {
  VertexSet left;
  VertexSet right;
  // (left vertex, right vertex)
  std::vector<std::pair<Vertex, Vertex>> edges;

  int size() const { return static_cast<int>(left.size() + right.size()); }
};

using Matching = std::vector<std::pair<Vertex, Vertex>>;

// Maximum cardinality matching (Hopcroft-Karp, neighbours in ascending order).
Matching max_matching(const BipartiteGraph& f);

struct DMResult {
  VertexSet c;
  VertexSet h;
  VertexSet r;
  Matching matching;
};

// C: vertices reachable from an unmatched vertex along an even alternating
// path, H = N(C), R the rest.
DMResult dm_decompose(const BipartiteGraph& f);

} // namespace sfvs
