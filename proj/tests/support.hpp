#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/matching.hpp"

namespace sfvs::testing {

// Instance built from vertex names; ids follow first mention.
class Builder {
public:
  Vertex id(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    const Vertex v = static_cast<Vertex>(names_.size());
    ids_.emplace(name, v);
    names_.push_back(name);
    return v;
  }
  Builder& vertex(const std::string& a) {
    id(a);
    return *this;
  }
  Builder& edge(const std::string& a, const std::string& b) {
    edges_.push_back({id(a), id(b)});
    return *this;
  }
  Builder& marked(const std::string& a, const std::string& b) {
    edge(a, b);
    marks_.push_back({id(a), id(b)});
    return *this;
  }
  Builder& terminal(const std::string& a) {
    terminals_.push_back(id(a));
    return *this;
  }
  Builder& clique(std::initializer_list<std::string> names) {
    std::vector<std::string> vs(names);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) pairs_.push_back({id(vs[i]), id(vs[j])});
    return *this;
  }
  Builder& budget(int k) {
    k_ = k;
    return *this;
  }

  Instance build() const {
    Instance inst(static_cast<int>(names_.size()), k_);
    for (auto [a, b] : edges_)
      if (!inst.graph().adjacent(a, b)) inst.add_edge(a, b);
    for (auto [a, b] : pairs_)
      if (!inst.graph().adjacent(a, b)) inst.add_edge(a, b);
    for (auto [a, b] : marks_) inst.mark(a, b);
    for (Vertex t : terminals_) inst.set_terminal(t, true);
    inst.clear_history();
    return inst;
  }

  VertexSet set(std::initializer_list<std::string> names) const {
    std::vector<Vertex> out;
    for (const auto& n : names) out.push_back(ids_.at(n));
    return make_set(out);
  }
  Vertex operator[](const std::string& name) const { return ids_.at(name); }
  const std::string& name(Vertex v) const { return names_[v]; }

private:
  std::map<std::string, Vertex> ids_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Edge> pairs_;
  std::vector<Edge> marks_;
  std::vector<Vertex> terminals_;
  int k_ = 0;
};

// Bipartite graph with A = u1..u7 (ids 1..7) and B = v1..v7 (ids 11..17).
inline Vertex left_id(int i) { return i; }
inline Vertex right_id(int i) { return 10 + i; }

// The drawn DM example: 14 vertices, 18 edges, a maximum matching of size 6.
inline BipartiteGraph dm_example() {
  BipartiteGraph f;
  for (int i = 1; i <= 7; ++i) {
    f.left.push_back(left_id(i));
    f.right.push_back(right_id(i));
  }
  const std::pair<int, int> edges[] = {{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 6}, {6, 4}, {1, 2}, {2, 1}, {2, 4},
                                       {3, 4}, {4, 2}, {4, 3}, {5, 3}, {4, 4}, {7, 4}, {4, 6}, {5, 5}, {5, 7}};
  for (auto [u, v] : edges) f.edges.push_back({left_id(u), right_id(v)});
  return f;
}

// Split instance whose auxiliary graph has A = {t1, t2, t3}; deleting v lets
// the DM reduction remove {t2, t3} and {u3, u4}.
inline Builder delete_example() {
  Builder b;
  b.clique({"u1", "u2", "u3", "u4", "v", "u6"});
  for (auto [t, u] : std::vector<std::pair<std::string, std::string>>{
           {"t1", "u1"}, {"t1", "u2"}, {"t1", "u3"}, {"t1", "u4"}, {"t2", "u3"}, {"t2", "v"}, {"t3", "u3"},
           {"t3", "u4"}, {"t3", "v"}, {"t5", "u6"}})
    b.marked(t, u);
  b.edge("t4", "u4").edge("t4", "v").edge("t5", "u4").edge("t6", "v").edge("t6", "u6");
  for (const char* t : {"t1", "t2", "t3", "t4", "t5", "t6"}) b.terminal(t);
  return b.budget(10);
}

// As above with a different wiring; hiding v makes {t2, t3, t4} and
// {u3, u4, u5} removable.
inline Builder hide_example() {
  Builder b;
  b.clique({"u1", "u2", "u3", "u4", "u5", "v", "u7"});
  for (auto [t, u] : std::vector<std::pair<std::string, std::string>>{
           {"t1", "u1"}, {"t1", "u2"}, {"t1", "u3"}, {"t1", "u4"}, {"t2", "u3"}, {"t2", "u5"}, {"t3", "u3"},
           {"t3", "u4"}, {"t3", "u5"}, {"t5", "u7"}})
    b.marked(t, u);
  b.edge("t4", "u4").edge("t4", "v").edge("t4", "u5").edge("t5", "u4").edge("t6", "u5");
  for (const char* t : {"t1", "t2", "t3", "t4", "t5", "t6"}) b.terminal(t);
  return b.budget(10);
}

// Chordal instance with an inner terminal "h" on the separator {h, v1, v2}
// between the cliques {h, u1, v1, v2} and {h, v1, v2, v3, v4}.
inline Builder dividing_example() {
  Builder b;
  b.edge("u1", "h").edge("u1", "v1").edge("u1", "v2");
  b.edge("h", "v1").edge("h", "v3").edge("h", "v4");
  b.clique({"v1", "v2", "v3", "v4"});
  b.edge("u2", "h").edge("u2", "v1").edge("u2", "v3");
  b.edge("u3", "h").edge("u3", "v2").edge("u3", "v4");
  b.edge("t3", "v1").edge("t3", "v3").edge("t3", "v4");
  b.edge("t4", "v3").edge("t4", "v2");
  b.edge("t1", "v1").edge("t1", "v3");
  b.edge("t2", "v2").edge("t2", "v4").edge("t2", "u3");
  b.marked("h", "v2").marked("u2", "t1").marked("v4", "t4");
  for (const char* t : {"h", "t1", "t2", "t3", "t4"}) b.terminal(t);
  return b.budget(10);
}

// Brute-force T-triangles over all triples.
std::vector<Triangle> brute_triangles(const Instance& inst);

// Whether g has an induced cycle of length >= 4 (exhaustive, small n).
bool has_chordless_cycle(const Graph& g);

// Minimum vertex covers of a bipartite graph, by exhaustive search.
std::vector<VertexSet> minimum_vertex_covers(const BipartiteGraph& f);

// Clauses of the decomposition: C = even-reachable, H = N(C), R perfectly
// matchable, and the partition covers every vertex exactly once.
std::string check_dm_clauses(const BipartiteGraph& f, const DMResult& dm);

// Split instance with a non-terminal clique and a terminal independent side;
// marks only on cross edges. Good except that the DM reduction may apply.
Instance random_split_terminal_side(std::uint64_t seed, int n_clique, int n_indep, double edge_prob,
                                    double mark_prob, int k);

// Random bipartite graph with both sides within [1, side_max].
BipartiteGraph random_bipartite(std::uint64_t seed, int side_max, double p);

} // namespace sfvs::testing
