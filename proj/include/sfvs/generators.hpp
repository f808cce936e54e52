#pragma once

#include <cstdint>
#include <string>

#include "sfvs/graph.hpp"

namespace sfvs {

// Vertex i > 0 joins a clique grown inside the closed neighbourhood of a
// uniformly chosen earlier vertex; each candidate joins with probability
// extra_edge_density. Throws std::invalid_argument on bad parameters.
Instance gen_chordal(int n, double extra_edge_density, double terminal_prob, double mark_prob, int k,
                     std::uint64_t seed);

// Clique on ids [0, n_clique), independent set after it.
Instance gen_split(int n_clique, int n_indep, double edge_prob, double terminal_prob, double mark_prob, int k,
                   std::uint64_t seed);

enum class StructuredKind { fish, separator1, separator2, inner_terminal };

StructuredKind parse_structured_kind(const std::string& name);
std::string to_string(StructuredKind kind);

struct StructuredParams {
  // Vertices grown around the planted core.
  int extra = 6;
  double density = 0.6;
  double terminal_prob = 0.3;
  double mark_prob = 0.1;
  int k = 6;
  // Candidates tried before giving up.
  int attempts = 5000;
};

// Instance on which the named structure shows up when solving: Step 8 for the
// separator kinds, Step 13 for fish, a dividing separator for inner_terminal.
// Candidates are drawn from sub-seeds until the solver's counters confirm it;
// throws std::runtime_error if none does within params.attempts.
Instance gen_structured(StructuredKind kind, const StructuredParams& params, std::uint64_t seed);

} // namespace sfvs
