#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "sfvs/graph.hpp"

namespace sfvs {

// Counter for an instrumented claim: how often it was checked and how often
// it failed.
struct Check {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;

  void record(bool ok) {
    ++checked;
    if (!ok) ++failed;
  }
};

struct SolveStats {
  std::uint64_t nodes = 0;
  int peak_depth = 0;
  double wall_ms = 0.0;
  std::map<std::string, std::uint64_t, std::less<>> firings;

  // Measure never drops on a reduction; branches drop it by (>=1, >=4/3).
  Check measure;
  // Chordal branching rules decrement k by (>=1, >=2).
  Check branching;
  // Part I fixpoints satisfy every thin property.
  Check thin;
  // Step 13 is only reached in the fish shape.
  Check fish;
  // s_0 <= s_i <= s_0 + 1 for each divided sub-instance.
  Check division;
  // Preconditions of the hide-non-terminal analysis before split Steps 5-6.
  // Advisory: twins involving a terminal of A are left alone by Step 4 and
  // can break it.
  Check split_precondition;
  // Split search ends with T = A.
  Check split_final_state;
  // Every split-side instance handed to the measure search is good.
  Check goodness;
  // A dividing separator exists whenever an inner terminal does.
  Check dividing;
  // Node count of each top-level good search stays under 10 n^2 1.820^mu.
  Check good_bound;
  // Exact split search: a solution found without the branching terminal
  // misses at most one other clique vertex.
  Check exact_branch;
  // Safety fallbacks (generic hitting-set branching) taken after a failed
  // structural expectation.
  std::uint64_t fallbacks = 0;

  void fire(std::string_view rule, std::uint64_t times = 1);
  std::uint64_t fired(std::string_view rule) const;
  void enter(int depth);
  void merge(const SolveStats& other);
  std::uint64_t violations() const;
  std::string to_json() const;
};

struct SolveOutcome {
  bool yes = false;
  // Empty unless yes.
  VertexSet solution;
  SolveStats stats;
};

} // namespace sfvs
