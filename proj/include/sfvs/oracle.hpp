#pragma once

#include <optional>

#include "sfvs/graph.hpp"

namespace sfvs {

struct OracleResult {
  // Minimum solution size, or nullopt when it exceeds the cap.
  std::optional<int> size;
  VertexSet witness;
};

// Exact minimum hitting set of all T-triangles and marked edges, branching on
// uncovered constraints (edges before triangles) down to depth `cap`.
// Supports at most 64 live vertices.
OracleResult oracle_solve(const Instance& inst, int cap);

// Exhaustive search over vertex subsets by increasing size, accepting the
// first that leaves no terminal on a cycle and covers every marked edge.
// Independent of triangle reasoning; meant for n <= 16.
OracleResult cycle_oracle_solve(const Instance& inst, int cap);

} // namespace sfvs
