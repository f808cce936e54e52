#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/stats.hpp"

namespace sfvs {

// k - (2/3)|A| held exactly as a count of thirds.
struct Measure {
  int thirds = 0;

  static Measure of(int budget, int a_size) { return {3 * budget - 2 * a_size}; }
  static Measure whole(int x) { return {3 * x}; }
  static Measure third(int x) { return {x}; }

  double value() const { return thirds / 3.0; }
  std::string str() const;

  friend Measure operator-(Measure a, Measure b) { return {a.thirds - b.thirds}; }
  friend auto operator<=>(Measure, Measure) = default;
};

// Measure of a good instance (A taken with the terminals as independent side).
Measure measure(const Instance& good);

// Why the instance is not good, or nullopt when it is.
std::optional<std::string> good_defect(const Instance& inst);
bool is_good(const Instance& inst);

// Both return the vertices deleted into the solution. hide_nonterminal commits
// N_M(v), marks the far edge of every T-triangle through v and deletes v; it
// is also valid for a terminal v, which it then keeps out of the solution.
VertexSet hide_terminal(Instance& inst, Vertex t);
VertexSet hide_nonterminal(Instance& inst, Vertex v);

// Throws std::invalid_argument unless the instance is good.
SolveOutcome good_alg(const Instance& inst);
// Throws std::invalid_argument unless the graph is split.
SolveOutcome solve_split(const Instance& inst);

namespace detail {

// Copy of `inst` with every marked edge between non-terminals a<b replaced by
// a fresh terminal adjacent to a and b, and the non-terminals completed to a
// clique. origin[v - inst.graph().capacity()] is the original vertex standing
// in for each fresh terminal.
Instance complete_to_good(const Instance& inst, std::vector<Vertex>& origin);
// Replaces fresh ids by their origin.
VertexSet map_back(const VertexSet& s, int capacity, const std::vector<Vertex>& origin);

// Runs the measure search on a (supposedly) good instance, shared stats.
std::optional<VertexSet> search_good(Instance& inst, SolveStats& stats, int depth);
// The split wrapper, shared stats.
std::optional<VertexSet> search_split(Instance& inst, SolveStats& stats, int depth);
// Cheapest solution within budget, enumerating which clique vertices to take.
std::optional<VertexSet> brute_force_split(const Instance& inst, const VertexSet& clique, const VertexSet& independent);

} // namespace detail

} // namespace sfvs
