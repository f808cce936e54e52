#include "sfvs/solve.hpp"

#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/chordal_solver.hpp"
#include "sfvs/exact_split.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/split_solver.hpp"

namespace sfvs {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::auto_;
  if (name == "whole") return Algorithm::whole;
  if (name == "split") return Algorithm::split;
  if (name == "exact-split") return Algorithm::exact_split;
  if (name == "oracle") return Algorithm::oracle;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(Algorithm algo) {
  switch (algo) {
  case Algorithm::auto_:
    return "auto";
  case Algorithm::whole:
    return "whole";
  case Algorithm::split:
    return "split";
  case Algorithm::exact_split:
    return "exact-split";
  case Algorithm::oracle:
    return "oracle";
  }
  return "?";
}

SolveOutcome solve_with(const Instance& inst, Algorithm algo) {
  switch (algo) {
  case Algorithm::auto_:
    return split_partition(inst.graph()) ? solve_split(inst) : solve_chordal(inst);
  case Algorithm::whole:
    return solve_chordal(inst);
  case Algorithm::split:
    return solve_split(inst);
  case Algorithm::exact_split:
    return solve_split_exact(inst);
  case Algorithm::oracle: {
    SolveOutcome out;
    const OracleResult r = oracle_solve(inst, inst.budget());
    out.yes = r.size.has_value();
    out.solution = r.witness;
    return out;
  }
  }
  throw std::invalid_argument("unknown algorithm");
}

Minimum minimize_with(const Instance& inst, Algorithm algo) {
  Minimum best;
  SolveStats total;
  Instance probe = inst;
  for (int b = 0;; ++b) {
    probe.set_budget(b);
    probe.clear_history();
    SolveOutcome o = solve_with(probe, algo);
    total.merge(o.stats);
    if (o.yes) {
      best.size = b;
      best.outcome = std::move(o);
      best.outcome.stats = total;
      return best;
    }
    // Deleting every vertex is always a solution.
    if (b > inst.graph().num_vertices()) throw std::logic_error("minimize: no solution within n");
  }
}

} // namespace sfvs
