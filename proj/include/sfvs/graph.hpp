#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfvs {

using Vertex = int;
// Sorted ascending, duplicate-free.
using VertexSet = std::vector<Vertex>;
// Normalised so that first < second.
using Edge = std::pair<Vertex, Vertex>;
using Triangle = std::array<Vertex, 3>;

Edge make_edge(Vertex a, Vertex b);

bool set_contains(const VertexSet& s, Vertex v);
void set_insert(VertexSet& s, Vertex v);
void set_erase(VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_includes(const VertexSet& super, const VertexSet& sub);
VertexSet make_set(std::vector<Vertex> vs);

// Simple undirected graph on stable integer ids. Removed vertices keep their
// id; every query skips them, and adjacency lists only hold live neighbours.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int capacity() const { return static_cast<int>(alive_.size()); }
  bool contains(Vertex v) const;
  int num_vertices() const { return live_; }
  int num_edges() const { return edges_; }
  int num_marked() const { return marked_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  const VertexSet& marked_neighbors(Vertex v) const { return marks_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool marked(Vertex a, Vertex b) const;

  VertexSet vertices() const;
  std::vector<Edge> edges() const;
  std::vector<Edge> marked_edges() const;

  Vertex add_vertex();
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  void set_marked(Vertex a, Vertex b, bool on);
  void remove_vertex(Vertex v);
  // Inverse of remove_vertex given the neighbourhood it had.
  void restore_vertex(Vertex v, const VertexSet& nbrs, const VertexSet& marked);
  // Drops the highest id, which must be live and isolated.
  void pop_vertex();

private:
  void check(Vertex v) const;

  std::vector<char> alive_;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> marks_;
  int live_ = 0;
  int edges_ = 0;
  int marked_ = 0;
};

// Graph plus terminals, marks and budget. Every mutation is journaled so a
// search can return to any earlier checkpoint.
class Instance {
public:
  using Checkpoint = std::size_t;

  Instance() = default;
  explicit Instance(int n, int budget = 0);

  const Graph& graph() const { return graph_; }
  int budget() const { return budget_; }
  bool is_terminal(Vertex v) const { return terminal_[v] != 0; }
  VertexSet terminals() const;
  VertexSet nonterminals() const;

  Checkpoint checkpoint() const { return journal_.size(); }
  void rollback(Checkpoint cp);
  // Forget the journal; earlier checkpoints become invalid.
  void clear_history() { journal_.clear(); }

  Vertex add_vertex(bool terminal = false);
  void add_edge(Vertex a, Vertex b, bool mark = false);
  void remove_edge(Vertex a, Vertex b);
  void mark(Vertex a, Vertex b);
  void unmark(Vertex a, Vertex b);
  void set_terminal(Vertex v, bool on);
  void set_budget(int k);
  void adjust_budget(int delta);
  void delete_vertex(Vertex v);
  void delete_vertices(const VertexSet& xs);

  // Same ids, everything outside `keep` deleted, empty journal.
  Instance induced(const VertexSet& keep) const;
  // Structural dump including ids; equal strings mean equal instances.
  std::string canonical() const;

private:
  enum class Op : unsigned char { add_vertex, remove_vertex, add_edge, remove_edge, mark, unmark, terminal, budget };
  struct Change {
    Op op;
    Vertex a = -1;
    Vertex b = -1;
    int value = 0;
    VertexSet nbrs;
    VertexSet marked;
  };

  Graph graph_;
  std::vector<char> terminal_;
  int budget_ = 0;
  std::vector<Change> journal_;
};

using UndoToken = Instance::Checkpoint;

// Deletes X (with incident edges and marks) and lowers k by dec.
UndoToken delete_vertices(Instance& inst, const VertexSet& xs, int dec);
void undo(Instance& inst, UndoToken token);

// Restores the instance to its state at construction on scope exit.
class RollbackGuard {
public:
  explicit RollbackGuard(Instance& inst) : inst_(inst), cp_(inst.checkpoint()) {}
  RollbackGuard(const RollbackGuard&) = delete;
  RollbackGuard& operator=(const RollbackGuard&) = delete;
  ~RollbackGuard() { inst_.rollback(cp_); }

private:
  Instance& inst_;
  Instance::Checkpoint cp_;
};

// All triangles with at least one terminal, each sorted, in ascending order.
std::vector<Triangle> enumerate_t_triangles(const Instance& inst);
// Triangles with a terminal that pass through v.
std::vector<Triangle> t_triangles_through(const Instance& inst, Vertex v);
bool in_t_triangle(const Instance& inst, Vertex v);
// v lies in some T-triangle or is incident to a marked edge.
bool in_constraint(const Instance& inst, Vertex v);
bool has_constraint(const Instance& inst);

enum class VerifyMode { triangle, cycle };

// Description of the first constraint left uncovered, or nullopt if S is a
// solution. Throws std::invalid_argument on dead or unknown ids.
std::optional<std::string> first_violation(const Instance& inst, const VertexSet& s, VerifyMode mode);
bool verify_solution(const Instance& inst, const VertexSet& s, VerifyMode mode = VerifyMode::triangle);

// Vertices of G - removed grouped by connected component, each sorted, ordered
// by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed = {});
// Graph-level bridges (edges on no cycle).
std::vector<Edge> bridges(const Graph& g);

} // namespace sfvs
