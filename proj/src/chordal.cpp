#include "sfvs/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sfvs {

std::vector<Vertex> lex_bfs(const Graph& g) {
  const int cap = g.capacity();
  const int n = g.num_vertices();
  std::vector<std::vector<int>> label(cap);
  std::vector<char> done(cap, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  VertexSet live = g.vertices();
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v : live) {
      if (done[v]) continue;
      if (best < 0 || std::lexicographical_compare(label[best].begin(), label[best].end(), label[v].begin(),
                                                   label[v].end()))
        best = v;
    }
    done[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!done[w]) label[w].push_back(n - step);
  }
  return order;
}

namespace {

// Position of each vertex in the elimination order and its later neighbours.
struct Elimination {
  std::vector<int> pos;
  std::vector<VertexSet> later;
};

Elimination eliminate(const Graph& g, const std::vector<Vertex>& peo) {
  Elimination e;
  e.pos.assign(g.capacity(), -1);
  e.later.assign(g.capacity(), {});
  for (std::size_t i = 0; i < peo.size(); ++i) e.pos[peo[i]] = static_cast<int>(i);
  for (Vertex v : peo)
    for (Vertex w : g.neighbors(v))
      if (e.pos[w] > e.pos[v]) e.later[v].push_back(w);
  return e;
}

Vertex parent_of(const Elimination& e, Vertex v) {
  Vertex p = -1;
  for (Vertex w : e.later[v])
    if (p < 0 || e.pos[w] < e.pos[p]) p = w;
  return p;
}

} // namespace

ChordalityResult is_chordal(const Graph& g) {
  std::vector<Vertex> order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  Elimination e = eliminate(g, order);
  for (Vertex v : order) {
    Vertex p = parent_of(e, v);
    if (p < 0) continue;
    for (Vertex w : e.later[v])
      if (w != p && !g.adjacent(p, w)) return {false, {}};
  }
  return {true, std::move(order)};
}

bool is_clique(const Graph& g, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v : g.vertices())
    if (is_simplicial(g, v)) out.push_back(v);
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  ChordalityResult ch = is_chordal(g);
  if (!ch.chordal) throw std::invalid_argument("maximal_cliques: graph is not chordal");
  Elimination e = eliminate(g, ch.peo);
  std::vector<char> dominated(g.capacity(), 0);
  for (Vertex u : ch.peo) {
    Vertex p = parent_of(e, u);
    if (p >= 0 && e.later[u].size() == e.later[p].size() + 1) dominated[p] = 1;
  }
  std::vector<VertexSet> out;
  for (Vertex v : ch.peo) {
    if (dominated[v]) continue;
    VertexSet q = e.later[v];
    set_insert(q, v);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueTree build_clique_forest(const Graph& g) {
  CliqueTree tree;
  tree.cliques = maximal_cliques(g);
  const int q = static_cast<int>(tree.cliques.size());
  tree.membership.assign(g.capacity(), {});
  for (int i = 0; i < q; ++i)
    for (Vertex v : tree.cliques[i]) tree.membership[v].push_back(i);

  std::vector<CliqueTreeEdge> cand;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      int w = static_cast<int>(set_intersection(tree.cliques[i], tree.cliques[j]).size());
      if (w > 0) cand.push_back({i, j, w});
    }
  std::stable_sort(cand.begin(), cand.end(), [](const CliqueTreeEdge& x, const CliqueTreeEdge& y) {
    return std::tie(y.weight, x.a, x.b) < std::tie(x.weight, y.a, y.b);
  });

  std::vector<int> root(q);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : cand) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    root[ra] = rb;
    tree.edges.push_back(e);
  }
  return tree;
}

CliqueTree build_clique_tree(const Graph& g) {
  if (connected_components(g).size() > 1) throw std::invalid_argument("build_clique_tree: graph is disconnected");
  return build_clique_forest(g);
}

std::optional<Separation> find_small_separator(const Graph& g, int max_size) {
  CliqueTree tree = build_clique_forest(g);
  for (const auto& e : tree.edges) {
    if (e.weight > max_size) continue;
    VertexSet q = tree.separator(e);
    auto comps = connected_components(g, q);
    if (comps.size() < 2) continue;
    return Separation{std::move(q), std::move(comps.front())};
  }
  return std::nullopt;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  VertexSet vs = g.vertices();
  std::vector<Vertex> order(vs.begin(), vs.end());
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  const int n = static_cast<int>(order.size());
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
  SplitPartition part;
  part.clique = make_set({order.begin(), order.begin() + m});
  part.independent = make_set({order.begin() + m, order.end()});
  if (!is_clique(g, part.clique)) throw std::logic_error("split_partition: clique side is not a clique");
  for (Vertex v : part.independent)
    for (Vertex w : g.neighbors(v))
      if (set_contains(part.independent, w)) throw std::logic_error("split_partition: independent side has an edge");
  return part;
}

} // namespace sfvs
