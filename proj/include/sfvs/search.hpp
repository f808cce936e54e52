#pragma once

#include <functional>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

// Records how to turn a solution of the current (reduced) instance into one
// of the instance the trail started from. Steps are replayed newest first.
class Trail {
public:
  using Fixup = std::function<void(VertexSet&)>;

  void commit(const VertexSet& vs);
  void commit(Vertex v) { commit(VertexSet{v}); }
  void fixup(Fixup f) { steps_.push_back(std::move(f)); }
  VertexSet finish(VertexSet solution) const;

private:
  std::vector<Fixup> steps_;
};

// Vertex sets to try when branching on the first uncovered constraint: a
// marked edge if there is one, else the first T-triangle. Empty if none.
std::vector<VertexSet> constraint_branches(const Instance& inst);

} // namespace sfvs
