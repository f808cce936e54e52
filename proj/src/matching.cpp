#include "sfvs/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace sfvs {

namespace {

struct Local {
  int nl = 0;
  int nr = 0;
  std::vector<std::vector<int>> adj_l; // left -> right indices
  std::vector<std::vector<int>> adj_r; // right -> left indices
};

Local localise(const BipartiteGraph& f) {
  if (!set_intersection(f.left, f.right).empty()) throw std::invalid_argument("bipartite sides overlap");
  Local loc;
  loc.nl = static_cast<int>(f.left.size());
  loc.nr = static_cast<int>(f.right.size());
  loc.adj_l.assign(loc.nl, {});
  loc.adj_r.assign(loc.nr, {});
  auto index = [](const VertexSet& side, Vertex v) {
    auto it = std::lower_bound(side.begin(), side.end(), v);
    if (it == side.end() || *it != v) throw std::invalid_argument("edge endpoint not on its side");
    return static_cast<int>(it - side.begin());
  };
  for (auto [a, b] : f.edges) {
    int i = index(f.left, a), j = index(f.right, b);
    loc.adj_l[i].push_back(j);
    loc.adj_r[j].push_back(i);
  }
  for (auto& v : loc.adj_l) v.erase(std::unique((std::sort(v.begin(), v.end()), v.begin()), v.end()), v.end());
  for (auto& v : loc.adj_r) v.erase(std::unique((std::sort(v.begin(), v.end()), v.begin()), v.end()), v.end());
  return loc;
}

// Hopcroft-Karp; returns mate arrays (-1 when free).
std::pair<std::vector<int>, std::vector<int>> hopcroft_karp(const Local& g) {
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> mate_l(g.nl, -1), mate_r(g.nr, -1), dist(g.nl);

  auto bfs = [&] {
    std::deque<int> q;
    bool found = false;
    for (int i = 0; i < g.nl; ++i) {
      dist[i] = mate_l[i] < 0 ? 0 : inf;
      if (mate_l[i] < 0) q.push_back(i);
    }
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j : g.adj_l[i]) {
        int k = mate_r[j];
        if (k < 0) {
          found = true;
        } else if (dist[k] == inf) {
          dist[k] = dist[i] + 1;
          q.push_back(k);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(g.nl);
  auto dfs = [&](auto&& self, int i) -> bool {
    for (; it[i] < g.adj_l[i].size(); ++it[i]) {
      int j = g.adj_l[i][it[i]];
      int k = mate_r[j];
      if (k < 0 || (dist[k] == dist[i] + 1 && self(self, k))) {
        mate_l[i] = j;
        mate_r[j] = i;
        ++it[i];
        return true;
      }
    }
    dist[i] = inf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int i = 0; i < g.nl; ++i)
      if (mate_l[i] < 0) dfs(dfs, i);
  }
  return {mate_l, mate_r};
}

} // namespace

Matching max_matching(const BipartiteGraph& f) {
  Local g = localise(f);
  auto [mate_l, mate_r] = hopcroft_karp(g);
  Matching out;
  for (int i = 0; i < g.nl; ++i)
    if (mate_l[i] >= 0) out.emplace_back(f.left[i], f.right[mate_l[i]]);
  return out;
}

DMResult dm_decompose(const BipartiteGraph& f) {
  Local g = localise(f);
  auto [mate_l, mate_r] = hopcroft_karp(g);

  // Node ids: left i -> i, right j -> nl + j.
  const int n = g.nl + g.nr;
  std::vector<char> even(n, 0), odd(n, 0);
  std::deque<int> q;
  for (int i = 0; i < g.nl; ++i)
    if (mate_l[i] < 0) even[i] = 1, q.push_back(i);
  for (int j = 0; j < g.nr; ++j)
    if (mate_r[j] < 0) even[g.nl + j] = 1, q.push_back(g.nl + j);
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x < g.nl) {
      for (int j : g.adj_l[x]) {
        if (j == mate_l[x] || odd[g.nl + j]) continue;
        odd[g.nl + j] = 1;
        int k = mate_r[j];
        if (k >= 0 && !even[k]) even[k] = 1, q.push_back(k);
      }
    } else {
      int j = x - g.nl;
      for (int i : g.adj_r[j]) {
        if (i == mate_r[j] || odd[i]) continue;
        odd[i] = 1;
        int k = mate_l[i];
        if (k >= 0 && !even[g.nl + k]) even[g.nl + k] = 1, q.push_back(g.nl + k);
      }
    }
  }

  DMResult res;
  auto id = [&](int x) { return x < g.nl ? f.left[x] : f.right[x - g.nl]; };
  for (int x = 0; x < n; ++x) {
    if (even[x] && odd[x]) throw std::logic_error("dm_decompose: vertex both even and odd");
    (even[x] ? res.c : odd[x] ? res.h : res.r).push_back(id(x));
  }
  res.c = make_set(res.c);
  res.h = make_set(res.h);
  res.r = make_set(res.r);
  for (int i = 0; i < g.nl; ++i)
    if (mate_l[i] >= 0) res.matching.emplace_back(f.left[i], f.right[mate_l[i]]);
  return res;
}

} // namespace sfvs
