#include "sfvs/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sfvs {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

void set_insert(VertexSet& s, Vertex v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

void set_erase(VertexSet& s, Vertex v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_includes(const VertexSet& super, const VertexSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// ---------------------------------------------------------------------------

Graph::Graph(int n) : alive_(n, 1), adj_(n), marks_(n), live_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

bool Graph::contains(Vertex v) const { return v >= 0 && v < capacity() && alive_[v]; }

void Graph::check(Vertex v) const {
  if (!contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not live");
}

bool Graph::adjacent(Vertex a, Vertex b) const { return contains(a) && set_contains(adj_[a], b); }

bool Graph::marked(Vertex a, Vertex b) const { return contains(a) && set_contains(marks_[a], b); }

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(live_);
  for (Vertex v = 0; v < capacity(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex v = 0; v < capacity(); ++v)
    for (Vertex w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

std::vector<Edge> Graph::marked_edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < capacity(); ++v)
    for (Vertex w : marks_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

Vertex Graph::add_vertex() {
  alive_.push_back(1);
  adj_.emplace_back();
  marks_.emplace_back();
  ++live_;
  return capacity() - 1;
}

void Graph::add_edge(Vertex a, Vertex b) {
  check(a);
  check(b);
  if (a == b) throw std::invalid_argument("self-loop at " + std::to_string(a));
  if (set_contains(adj_[a], b)) throw std::invalid_argument("parallel edge");
  set_insert(adj_[a], b);
  set_insert(adj_[b], a);
  ++edges_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (!adjacent(a, b)) throw std::invalid_argument("no such edge");
  if (marked(a, b)) set_marked(a, b, false);
  set_erase(adj_[a], b);
  set_erase(adj_[b], a);
  --edges_;
}

void Graph::set_marked(Vertex a, Vertex b, bool on) {
  if (!adjacent(a, b)) throw std::invalid_argument("marking a non-edge");
  if (marked(a, b) == on) return;
  if (on) {
    set_insert(marks_[a], b);
    set_insert(marks_[b], a);
    ++marked_;
  } else {
    set_erase(marks_[a], b);
    set_erase(marks_[b], a);
    --marked_;
  }
}

void Graph::remove_vertex(Vertex v) {
  check(v);
  for (Vertex w : adj_[v]) {
    set_erase(adj_[w], v);
    set_erase(marks_[w], v);
  }
  edges_ -= degree(v);
  marked_ -= static_cast<int>(marks_[v].size());
  adj_[v].clear();
  marks_[v].clear();
  alive_[v] = 0;
  --live_;
}

void Graph::restore_vertex(Vertex v, const VertexSet& nbrs, const VertexSet& marked) {
  if (v < 0 || v >= capacity() || alive_[v]) throw std::invalid_argument("restoring a live vertex");
  alive_[v] = 1;
  ++live_;
  adj_[v] = nbrs;
  marks_[v] = marked;
  for (Vertex w : nbrs) set_insert(adj_[w], v);
  for (Vertex w : marked) set_insert(marks_[w], v);
  edges_ += static_cast<int>(nbrs.size());
  marked_ += static_cast<int>(marked.size());
}

void Graph::pop_vertex() {
  Vertex v = capacity() - 1;
  check(v);
  if (degree(v) != 0) throw std::logic_error("popping a vertex with edges");
  alive_.pop_back();
  adj_.pop_back();
  marks_.pop_back();
  --live_;
}

// ---------------------------------------------------------------------------

Instance::Instance(int n, int budget) : graph_(n), terminal_(n, 0), budget_(budget) {}

VertexSet Instance::terminals() const {
  VertexSet out;
  for (Vertex v : graph_.vertices())
    if (terminal_[v]) out.push_back(v);
  return out;
}

VertexSet Instance::nonterminals() const {
  VertexSet out;
  for (Vertex v : graph_.vertices())
    if (!terminal_[v]) out.push_back(v);
  return out;
}

void Instance::rollback(Checkpoint cp) {
  if (cp > journal_.size()) throw std::logic_error("rollback past the journal");
  while (journal_.size() > cp) {
    Change& c = journal_.back();
    switch (c.op) {
    case Op::add_vertex:
      graph_.pop_vertex();
      terminal_.pop_back();
      break;
    case Op::remove_vertex: graph_.restore_vertex(c.a, c.nbrs, c.marked); break;
    case Op::add_edge: graph_.remove_edge(c.a, c.b); break;
    case Op::remove_edge:
      graph_.add_edge(c.a, c.b);
      if (c.value) graph_.set_marked(c.a, c.b, true);
      break;
    case Op::mark: graph_.set_marked(c.a, c.b, false); break;
    case Op::unmark: graph_.set_marked(c.a, c.b, true); break;
    case Op::terminal: terminal_[c.a] = static_cast<char>(c.value); break;
    case Op::budget: budget_ -= c.value; break;
    }
    journal_.pop_back();
  }
}

Vertex Instance::add_vertex(bool terminal) {
  Vertex v = graph_.add_vertex();
  terminal_.push_back(terminal ? 1 : 0);
  journal_.push_back({Op::add_vertex, v});
  return v;
}

void Instance::add_edge(Vertex a, Vertex b, bool mark_it) {
  graph_.add_edge(a, b);
  journal_.push_back({Op::add_edge, a, b});
  if (mark_it) mark(a, b);
}

void Instance::remove_edge(Vertex a, Vertex b) {
  bool was = graph_.marked(a, b);
  graph_.remove_edge(a, b);
  journal_.push_back({Op::remove_edge, a, b, was ? 1 : 0});
}

void Instance::mark(Vertex a, Vertex b) {
  if (graph_.marked(a, b)) return;
  graph_.set_marked(a, b, true);
  journal_.push_back({Op::mark, a, b});
}

void Instance::unmark(Vertex a, Vertex b) {
  if (!graph_.marked(a, b)) return;
  graph_.set_marked(a, b, false);
  journal_.push_back({Op::unmark, a, b});
}

void Instance::set_terminal(Vertex v, bool on) {
  if (!graph_.contains(v)) throw std::invalid_argument("terminal flag on dead vertex");
  if (is_terminal(v) == on) return;
  journal_.push_back({Op::terminal, v, -1, terminal_[v]});
  terminal_[v] = on ? 1 : 0;
}

void Instance::set_budget(int k) { adjust_budget(k - budget_); }

void Instance::adjust_budget(int delta) {
  if (delta == 0) return;
  budget_ += delta;
  journal_.push_back({Op::budget, -1, -1, delta});
}

void Instance::delete_vertex(Vertex v) {
  Change c{Op::remove_vertex, v};
  c.nbrs = graph_.neighbors(v);
  c.marked = graph_.marked_neighbors(v);
  graph_.remove_vertex(v);
  journal_.push_back(std::move(c));
}

void Instance::delete_vertices(const VertexSet& xs) {
  for (Vertex v : xs) delete_vertex(v);
}

Instance Instance::induced(const VertexSet& keep) const {
  Instance out = *this;
  out.journal_.clear();
  for (Vertex v : graph_.vertices())
    if (!set_contains(keep, v)) out.graph_.remove_vertex(v);
  return out;
}

std::string Instance::canonical() const {
  std::ostringstream os;
  os << "cap " << graph_.capacity() << " k " << budget_ << "\nV";
  for (Vertex v : graph_.vertices()) os << ' ' << v << (is_terminal(v) ? "t" : "");
  os << "\nE";
  for (auto [a, b] : graph_.edges()) os << ' ' << a << '-' << b << (graph_.marked(a, b) ? "*" : "");
  os << '\n';
  return os.str();
}

UndoToken delete_vertices(Instance& inst, const VertexSet& xs, int dec) {
  UndoToken token = inst.checkpoint();
  inst.delete_vertices(xs);
  inst.adjust_budget(-dec);
  return token;
}

void undo(Instance& inst, UndoToken token) { inst.rollback(token); }

// ---------------------------------------------------------------------------

std::vector<Triangle> t_triangles_through(const Instance& inst, Vertex v) {
  const Graph& g = inst.graph();
  std::vector<Triangle> out;
  const VertexSet& nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    Vertex a = nv[i];
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      Vertex b = nv[j];
      if (!g.adjacent(a, b)) continue;
      if (!(inst.is_terminal(v) || inst.is_terminal(a) || inst.is_terminal(b))) continue;
      Triangle t{v, a, b};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  return out;
}

bool in_t_triangle(const Instance& inst, Vertex v) {
  const Graph& g = inst.graph();
  const VertexSet& nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      if ((inst.is_terminal(v) || inst.is_terminal(nv[i]) || inst.is_terminal(nv[j])) && g.adjacent(nv[i], nv[j]))
        return true;
  return false;
}

bool in_constraint(const Instance& inst, Vertex v) {
  return !inst.graph().marked_neighbors(v).empty() || in_t_triangle(inst, v);
}

bool has_constraint(const Instance& inst) {
  if (inst.graph().num_marked() > 0) return true;
  for (Vertex t : inst.terminals())
    if (in_t_triangle(inst, t)) return true;
  return false;
}

std::vector<Triangle> enumerate_t_triangles(const Instance& inst) {
  const Graph& g = inst.graph();
  std::vector<Triangle> out;
  for (Vertex a : g.vertices()) {
    const VertexSet& na = g.neighbors(a);
    auto first = std::upper_bound(na.begin(), na.end(), a);
    for (auto i = first; i != na.end(); ++i)
      for (auto j = std::next(i); j != na.end(); ++j)
        if (g.adjacent(*i, *j) && (inst.is_terminal(a) || inst.is_terminal(*i) || inst.is_terminal(*j)))
          out.push_back({a, *i, *j});
  }
  return out;
}

namespace {

// Vertices lying in a biconnected block with at least three vertices.
std::vector<char> on_cycle(const Graph& g) {
  const int cap = g.capacity();
  std::vector<int> disc(cap, -1), low(cap, 0);
  std::vector<char> cyc(cap, 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          VertexSet block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            set_insert(block, e.first);
            set_insert(block, e.second);
            if (e == Edge{v, w}) break;
          }
          if (block.size() >= 3)
            for (Vertex x : block) cyc[x] = 1;
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v : g.vertices())
    if (disc[v] < 0) dfs(v, -1);
  return cyc;
}

} // namespace

std::optional<std::string> first_violation(const Instance& inst, const VertexSet& s, VerifyMode mode) {
  const Graph& g = inst.graph();
  for (Vertex v : s)
    if (!g.contains(v)) throw std::invalid_argument("solution names unknown vertex " + std::to_string(v));
  const VertexSet sorted = make_set(s);
  Instance rest = inst.induced(set_difference(g.vertices(), sorted));
  for (auto [a, b] : inst.graph().marked_edges())
    if (!set_contains(sorted, a) && !set_contains(sorted, b))
      return "marked edge " + std::to_string(a) + " " + std::to_string(b) + " uncovered";
  if (mode == VerifyMode::triangle) {
    auto tris = enumerate_t_triangles(rest);
    if (!tris.empty()) {
      auto& t = tris.front();
      return "T-triangle " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) +
             " survives";
    }
  } else {
    auto cyc = on_cycle(rest.graph());
    for (Vertex t : rest.terminals())
      if (cyc[t]) return "terminal " + std::to_string(t) + " lies on a cycle";
  }
  return std::nullopt;
}

bool verify_solution(const Instance& inst, const VertexSet& s, VerifyMode mode) {
  return !first_violation(inst, s, mode).has_value();
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  std::vector<char> seen(g.capacity(), 0);
  for (Vertex v : removed)
    if (g.contains(v)) seen[v] = 1;
  std::vector<VertexSet> out;
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  const int cap = g.capacity();
  std::vector<int> disc(cap, -1), low(cap, 0);
  std::vector<Edge> out;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(make_edge(v, w));
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v : g.vertices())
    if (disc[v] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace sfvs
