#pragma once

#include <optional>
#include <string>

#include "sfvs/graph.hpp"
#include "sfvs/stats.hpp"

namespace sfvs {

// auto_: the split solver on split graphs, the chordal solver otherwise.
enum class Algorithm { auto_, whole, split, exact_split, oracle };

// Throws std::invalid_argument on unknown names.
Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algo);

// Decision at the instance's budget. Precondition violations (wrong graph
// class, marks for exact_split) surface as std::invalid_argument.
SolveOutcome solve_with(const Instance& inst, Algorithm algo);

struct Minimum {
  // Size of a minimum solution; the solution itself is outcome.solution.
  int size = 0;
  SolveOutcome outcome;
};

// Minimum solution by deciding budgets 0, 1, ... until the answer is YES.
Minimum minimize_with(const Instance& inst, Algorithm algo);

} // namespace sfvs
