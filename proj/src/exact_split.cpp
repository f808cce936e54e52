#include "sfvs/exact_split.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/split_solver.hpp"

namespace sfvs {

namespace {

class ExactSearch {
public:
  explicit ExactSearch(SolveStats& stats) : stats_(stats) {}

  std::optional<VertexSet> run(Instance& inst, int depth) {
    stats_.enter(depth);
    if (inst.budget() < 0) return std::nullopt;
    auto part = split_partition(inst.graph());
    if (!part) throw std::logic_error("exact split search: graph stopped being split");
    const VertexSet& clique = part->clique;
    const int k = inst.budget();

    if (static_cast<int>(clique.size()) <= kExactDirect) {
      stats_.fire("exact.direct");
      return detail::brute_force_split(inst, clique, part->independent);
    }

    for (Vertex t : clique) {
      if (!inst.is_terminal(t)) continue;
      stats_.fire("exact.branch");
      VertexSet rest = clique;
      set_erase(rest, t);
      const VertexSet block(rest.begin(), rest.begin() + kExactBlock);
      const VertexSet remainder = set_difference(rest, block);
      // Vertices the block and remainder branches delete, next to the smaller
      // drops (7 and |K| - 8) the running-time analysis charges them.
      stats_.fire("exact.branch.block_removed", block.size());
      stats_.fire("exact.branch.block_charged", 7);
      stats_.fire("exact.branch.rest_removed", remainder.size());
      stats_.fire("exact.branch.rest_charged", clique.size() - 8);
      const VertexSet picks[] = {{t}, block, remainder};
      for (const VertexSet& pick : picks) {
        auto cp = inst.checkpoint();
        delete_vertices(inst, pick, static_cast<int>(pick.size()));
        auto sub = run(inst, depth + 1);
        inst.rollback(cp);
        if (!sub) continue;
        VertexSet s = set_union(*sub, pick);
        if (!set_contains(s, t)) stats_.exact_branch.record(set_difference(rest, s).size() <= 1);
        return s;
      }
      return std::nullopt;
    }

    if (static_cast<int>(part->independent.size()) <= k) {
      stats_.fire("exact.small_side");
      return part->independent;
    }
    if (static_cast<int>(clique.size()) <= k) {
      stats_.fire("exact.small_side");
      return clique;
    }
    stats_.fire("exact.parameterized");
    return detail::search_split(inst, stats_, depth + 1);
  }

private:
  SolveStats& stats_;
};

} // namespace

SolveOutcome solve_split_exact(const Instance& inst) {
  if (inst.graph().num_marked() > 0) throw std::invalid_argument("solve_split_exact: marked edges are not supported");
  if (!split_partition(inst.graph())) throw std::invalid_argument("solve_split_exact: graph is not split");
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  Instance work = inst;
  work.clear_history();
  ExactSearch search(out.stats);
  auto sol = search.run(work, 0);
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (sol) {
    if (static_cast<int>(sol->size()) > inst.budget() || !verify_solution(inst, *sol))
      throw std::logic_error("exact split search produced an invalid solution");
    out.yes = true;
    out.solution = std::move(*sol);
  }
  return out;
}

} // namespace sfvs
