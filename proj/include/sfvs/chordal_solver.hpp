#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/search.hpp"
#include "sfvs/stats.hpp"

namespace sfvs {

// Structure expected once no simplification rule applies.
struct ThinCheck {
  bool marks_form_matching = true;
  bool no_isolated_vertex = true;
  bool simplicial_cliques_large = true;
  bool unique_simplicial_terminal = true;
  bool small_separators_leave_large_parts = true;

  bool ok() const {
    return marks_form_matching && no_isolated_vertex && simplicial_cliques_large && unique_simplicial_terminal &&
           small_separators_leave_large_parts;
  }
  std::string describe() const;
};

ThinCheck check_thin(const Instance& inst);

// Terminals that are not simplicial.
VertexSet inner_terminals(const Instance& inst);

// Minimum solution size of the instance induced by z if it is at most bound.
std::optional<int> component_min_solution_leq(const Instance& inst, const VertexSet& z, int bound,
                                              VertexSet* witness = nullptr);

// Terminal standing in for a small side of a one- or two-vertex separator q.
struct GadgetTerminal {
  VertexSet nbrs;
  VertexSet marked;
  friend auto operator<=>(const GadgetTerminal&, const GadgetTerminal&) = default;
};

// extra[mask]: how much more the side costs when the vertices q[i] with bit i
// set in mask stay. Returns the terminals with the same cost profile; throws
// std::logic_error for profiles no side can have.
std::vector<GadgetTerminal> separator_gadget(const VertexSet& q, const std::vector<int>& extra);

// One search option: delete `commit` into the solution, drop `discard` (its
// cost `discard_cost` is paid from k), optionally keep `hide` out of the
// solution, recurse. `extra` adds vertices to a found solution.
struct Branch {
  VertexSet commit;
  VertexSet discard;
  int discard_cost = 0;
  std::optional<Vertex> hide;
  std::function<VertexSet(const VertexSet&)> extra;

  int decrement() const { return static_cast<int>(commit.size()) + discard_cost; }
};

struct Part1Result {
  enum class Kind { fixpoint, branch, no } kind = Kind::fixpoint;
  // Rule that produced the branch.
  std::string rule;
  std::vector<Branch> branches;
  // Maps a solution of the simplified instance back to the input one.
  Trail trail;
};

// Simplification rules 1-8 in priority order until a fixpoint or a branch.
Part1Result apply_part1(Instance& inst, SolveStats& stats);

// Completes a thin instance without inner terminals to a good split instance.
// origin receives the stand-in for each fresh terminal (see complete_to_good).
Instance reduce_thin_to_good(const Instance& inst, std::vector<Vertex>* origin = nullptr);

struct DividingContext {
  Vertex hat = -1;
  VertexSet separator;
  VertexSet q1;
  VertexSet q2;
  VertexSet component;
  VertexSet x0;
  // Q1 minus the hat vertex, ascending; sizes[i] belongs to others[i].
  VertexSet others;
  int s0 = -1;
  std::vector<int> sizes;
  VertexSet u0;
  VertexSet u1;
  VertexSet witness0;
  // Witness for others[i] (of size sizes[i]).
  std::vector<VertexSet> witnesses;
};

// Context for the clique-tree edge (q1, q2) with q1's side as the good part.
std::optional<DividingContext> make_dividing_context(const Instance& inst, const VertexSet& q1, const VertexSet& q2);
// All valid contexts over the clique forest.
std::vector<DividingContext> dividing_candidates(const Instance& inst);
// The candidate with the largest good component (first in scan order on ties).
std::optional<DividingContext> find_dividing_separator(const Instance& inst);

// Solves the sub-instances of the division at the current budget. False means
// the instance is a NO-instance.
bool evaluate_division(const Instance& inst, DividingContext& ctx, SolveStats& stats);

// Branch options for the divided instance; `rule` names the step used.
std::vector<Branch> divide_and_conquer(const Instance& inst, const DividingContext& ctx, SolveStats& stats,
                                       std::string& rule);

// Throws std::invalid_argument on non-chordal input.
SolveOutcome solve_chordal(const Instance& inst);
// Minimum solution if its size is at most cap (yes == found).
SolveOutcome minimize_chordal(const Instance& inst, int cap);

namespace detail {
std::optional<VertexSet> search_chordal(Instance& inst, SolveStats& stats, int depth);
}

} // namespace sfvs
