#pragma once

#include <optional>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

// Lex-BFS visiting order; ties go to the lowest id.
std::vector<Vertex> lex_bfs(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering (first eliminated first) when chordal.
  std::vector<Vertex> peo;
};

ChordalityResult is_chordal(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& vs);
bool is_simplicial(const Graph& g, Vertex v);
VertexSet simplicial_vertices(const Graph& g);

// Maximal cliques of a chordal graph, each sorted, in lexicographic order.
// Throws std::invalid_argument on non-chordal input.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct CliqueTreeEdge {
  int a = 0;
  int b = 0;
  int weight = 0;
};

struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<CliqueTreeEdge> edges;
  // membership[v]: indices of the cliques containing v (empty for dead ids).
  std::vector<std::vector<int>> membership;

  VertexSet separator(const CliqueTreeEdge& e) const { return set_intersection(cliques[e.a], cliques[e.b]); }
};

// Maximum-weight spanning forest of the clique graph; a tree per component.
CliqueTree build_clique_forest(const Graph& g);
// As above but requires a connected chordal graph.
CliqueTree build_clique_tree(const Graph& g);

struct Separation {
  VertexSet separator;
  VertexSet component;
};

// Some clique-tree separator of size <= max_size with one component of G - Q
// (the one holding the smallest id), scanning tree edges in order.
std::optional<Separation> find_small_separator(const Graph& g, int max_size);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

// Hammer-Simeone degree test; the clique side is as large as possible.
std::optional<SplitPartition> split_partition(const Graph& g);

} // namespace sfvs
