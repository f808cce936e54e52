#pragma once

#include "sfvs/graph.hpp"
#include "sfvs/stats.hpp"

namespace sfvs {

// Decision version without marks, exponential in n only. Throws
// std::invalid_argument on marked edges or a non-split graph.
SolveOutcome solve_split_exact(const Instance& inst);

// Size of the fixed clique subset taken whole by the second branch.
inline constexpr int kExactBlock = 10;
// Clique size solved by enumeration.
inline constexpr int kExactDirect = 15;

} // namespace sfvs
