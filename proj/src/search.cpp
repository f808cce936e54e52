#include "sfvs/search.hpp"

namespace sfvs {

void Trail::commit(const VertexSet& vs) {
  if (vs.empty()) return;
  steps_.push_back([vs](VertexSet& s) { s = set_union(s, vs); });
}

VertexSet Trail::finish(VertexSet solution) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) (*it)(solution);
  return solution;
}

std::vector<VertexSet> constraint_branches(const Instance& inst) {
  auto marked = inst.graph().marked_edges();
  if (!marked.empty()) return {{marked.front().first}, {marked.front().second}};
  for (Vertex t : inst.terminals()) {
    auto tris = t_triangles_through(inst, t);
    if (!tris.empty()) {
      const Triangle& tr = tris.front();
      return {{tr[0]}, {tr[1]}, {tr[2]}};
    }
  }
  return {};
}

} // namespace sfvs
