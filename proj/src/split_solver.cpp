#include "sfvs/split_solver.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/dm_reduction.hpp"
#include "sfvs/search.hpp"

namespace sfvs {

std::string Measure::str() const {
  if (thirds % 3 == 0) return std::to_string(thirds / 3);
  return std::to_string(thirds) + "/3";
}

Measure measure(const Instance& good) {
  return Measure::of(good.budget(), static_cast<int>(build_auxiliary(good, good.terminals()).a.size()));
}

std::optional<std::string> good_defect(const Instance& inst) {
  const Graph& g = inst.graph();
  VertexSet terms = inst.terminals();
  for (Vertex t : terms)
    for (Vertex w : g.neighbors(t))
      if (inst.is_terminal(w)) return "terminals " + std::to_string(t) + " and " + std::to_string(w) + " adjacent";
  if (!is_clique(g, inst.nonterminals())) return "non-terminals do not form a clique";
  for (auto [a, b] : g.marked_edges())
    if (inst.is_terminal(a) == inst.is_terminal(b))
      return "marked edge " + std::to_string(a) + " " + std::to_string(b) + " not terminal/non-terminal";
  if (dm_applicable(inst, terms)) return "DM reduction applies";
  return std::nullopt;
}

bool is_good(const Instance& inst) { return !good_defect(inst).has_value(); }

VertexSet hide_terminal(Instance& inst, Vertex t) {
  VertexSet nm = inst.graph().marked_neighbors(t);
  inst.delete_vertices(nm);
  inst.adjust_budget(-static_cast<int>(nm.size()));
  return nm;
}

VertexSet hide_nonterminal(Instance& inst, Vertex v) {
  VertexSet nm = inst.graph().marked_neighbors(v);
  inst.delete_vertices(nm);
  inst.adjust_budget(-static_cast<int>(nm.size()));
  for (const Triangle& tr : t_triangles_through(inst, v)) {
    Vertex a = -1, b = -1;
    for (Vertex x : tr)
      if (x != v) (a < 0 ? a : b) = x;
    inst.mark(a, b);
  }
  inst.delete_vertex(v);
  return nm;
}

namespace detail {

Instance complete_to_good(const Instance& inst, std::vector<Vertex>& origin) {
  Instance out = inst;
  out.clear_history();
  origin.clear();
  for (auto [a, b] : inst.graph().marked_edges()) {
    if (inst.is_terminal(a) || inst.is_terminal(b)) continue;
    Vertex t = out.add_vertex(true);
    out.add_edge(t, a);
    out.add_edge(t, b);
    out.unmark(a, b);
    origin.push_back(a);
  }
  VertexSet nts = out.nonterminals();
  for (std::size_t i = 0; i < nts.size(); ++i)
    for (std::size_t j = i + 1; j < nts.size(); ++j)
      if (!out.graph().adjacent(nts[i], nts[j])) out.add_edge(nts[i], nts[j]);
  out.clear_history();
  return out;
}

VertexSet map_back(const VertexSet& s, int capacity, const std::vector<Vertex>& origin) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(v < capacity ? v : origin.at(v - capacity));
  return make_set(std::move(out));
}

std::optional<VertexSet> brute_force_split(const Instance& inst, const VertexSet& clique, const VertexSet& independent) {
  const Graph& g = inst.graph();
  const int kk = static_cast<int>(clique.size());
  if (kk > 24) throw std::invalid_argument("brute_force_split: clique side too large");
  std::optional<VertexSet> best;
  for (std::uint32_t mask = 0; mask < (1u << kk); ++mask) {
    VertexSet taken, kept;
    for (int i = 0; i < kk; ++i) ((mask >> i) & 1u ? taken : kept).push_back(clique[i]);
    if (static_cast<int>(taken.size()) > inst.budget()) continue;
    bool ok = true;
    bool kept_terminal = false;
    for (Vertex x : kept) {
      kept_terminal = kept_terminal || inst.is_terminal(x);
      for (Vertex y : g.marked_neighbors(x))
        if (set_contains(kept, y)) ok = false;
    }
    if (!ok || (kept_terminal && kept.size() >= 3)) continue;
    VertexSet sol = taken;
    for (Vertex x : independent) {
      if (!g.contains(x)) continue;
      bool forced = false;
      for (Vertex y : g.marked_neighbors(x))
        if (set_contains(kept, y)) forced = true;
      if (!forced) {
        VertexSet rest = set_intersection(g.neighbors(x), kept);
        bool term = inst.is_terminal(x);
        for (Vertex y : rest) term = term || inst.is_terminal(y);
        forced = rest.size() >= 2 && term;
      }
      if (forced) sol.push_back(x);
      if (static_cast<int>(sol.size()) > inst.budget()) break;
    }
    if (static_cast<int>(sol.size()) > inst.budget()) continue;
    if (!best || sol.size() < best->size()) best = make_set(sol);
  }
  return best;
}

namespace {

constexpr int kWrapperConstant = 3;

class GoodSearch {
public:
  explicit GoodSearch(SolveStats& stats) : stats_(stats) {}

  std::optional<VertexSet> run(Instance& inst, int depth);

private:
  using Option = std::function<VertexSet(Instance&)>;

  void dm_fix(Instance& inst, Trail& trail) {
    DmReduction r = dm_reduce(inst, inst.terminals());
    if (r.changed) {
      stats_.fire("split.dm_reduction", static_cast<std::uint64_t>(r.rounds));
      trail.commit(r.committed);
    }
  }

  void after_reduction(const Instance& inst, Measure before) {
    stats_.measure.record(before - measure(inst) >= Measure::whole(0));
    stats_.goodness.record(is_good(inst));
  }

  std::optional<VertexSet> branch(Instance& inst, Trail& trail, int depth, const std::vector<Option>& options,
                                  const std::vector<Measure>& drops);
  std::optional<VertexSet> fallback(Instance& inst, Trail& trail, int depth);
  bool preconditions_hold(const Instance& inst) const;

  SolveStats& stats_;
};

std::optional<VertexSet> GoodSearch::branch(Instance& inst, Trail& trail, int depth, const std::vector<Option>& options,
                                            const std::vector<Measure>& drops) {
  const Measure before = measure(inst);
  for (std::size_t i = 0; i < options.size(); ++i) {
    auto cp = inst.checkpoint();
    Trail local;
    local.commit(options[i](inst));
    dm_fix(inst, local);
    stats_.measure.record(before - measure(inst) >= drops[i]);
    stats_.goodness.record(is_good(inst));
    auto sub = run(inst, depth + 1);
    inst.rollback(cp);
    if (sub) return trail.finish(local.finish(std::move(*sub)));
  }
  return std::nullopt;
}

std::optional<VertexSet> GoodSearch::fallback(Instance& inst, Trail& trail, int depth) {
  ++stats_.fallbacks;
  for (const VertexSet& pick : constraint_branches(inst)) {
    auto cp = inst.checkpoint();
    delete_vertices(inst, pick, static_cast<int>(pick.size()));
    Trail local;
    dm_fix(inst, local);
    auto sub = run(inst, depth + 1);
    inst.rollback(cp);
    if (sub) return trail.finish(set_union(local.finish(std::move(*sub)), pick));
  }
  return std::nullopt;
}

bool GoodSearch::preconditions_hold(const Instance& inst) const {
  const Graph& g = inst.graph();
  std::map<VertexSet, int> pairs;
  for (Vertex t : inst.terminals()) {
    if (g.degree(t) < 2) return false;
    if (g.degree(t) == 2 && ++pairs[g.neighbors(t)] > 1) return false;
  }
  return true;
}

std::optional<VertexSet> GoodSearch::run(Instance& inst, int depth) {
  stats_.enter(depth);
  RollbackGuard guard(inst);
  Trail trail;
  const Graph& g = inst.graph();

  while (true) {
    const VertexSet terms = inst.terminals();
    const AuxiliaryBipartite aux = build_auxiliary(inst, terms);
    const int k = inst.budget();
    const int a_size = static_cast<int>(aux.a.size());
    const Measure before = Measure::of(k, a_size);

    if (a_size > k || before < Measure::whole(0)) {
      stats_.fire("split.step1");
      return std::nullopt;
    }
    if (static_cast<int>(terms.size()) <= k) {
      stats_.fire("split.step1");
      return trail.finish(terms);
    }

    VertexSet idle;
    for (Vertex v : g.vertices())
      if (!in_constraint(inst, v)) idle.push_back(v);
    if (!idle.empty()) {
      stats_.fire("split.step2");
      inst.delete_vertices(idle);
      dm_fix(inst, trail);
      after_reduction(inst, before);
      continue;
    }

    const VertexSet nts = inst.nonterminals();
    auto terminal_nbrs = [&](Vertex v) {
      VertexSet out;
      for (Vertex w : g.neighbors(v))
        if (inst.is_terminal(w)) out.push_back(w);
      return out;
    };

    bool changed = false;
    for (Vertex v : nts)
      if (terminal_nbrs(v).size() == 1) {
        stats_.fire("split.step3");
        trail.commit(hide_nonterminal(inst, v));
        changed = true;
        break;
      }
    if (!changed)
      for (Vertex t : terms)
        if (!set_contains(aux.a, t) && g.degree(t) == 2 && g.marked_neighbors(t).size() == 1) {
          stats_.fire("split.step4");
          trail.commit(hide_terminal(inst, t));
          changed = true;
          break;
        }
    if (!changed) {
      std::map<VertexSet, Vertex> seen;
      for (Vertex t : terms) {
        if (set_contains(aux.a, t) || g.degree(t) != 2 || !g.marked_neighbors(t).empty()) continue;
        auto [it, fresh] = seen.emplace(g.neighbors(t), t);
        if (fresh) continue;
        stats_.fire("split.step4");
        const Vertex twin = it->second;
        const Vertex u = g.neighbors(t)[0], w = g.neighbors(t)[1];
        inst.delete_vertex(t);
        trail.fixup([twin, u, w](VertexSet& s) {
          if (!set_contains(s, u) && !set_contains(s, w) && set_contains(s, twin)) {
            set_erase(s, twin);
            set_insert(s, u);
          }
        });
        changed = true;
        break;
      }
    }
    if (changed) {
      dm_fix(inst, trail);
      after_reduction(inst, before);
      continue;
    }

    stats_.split_precondition.record(preconditions_hold(inst));

    for (Vertex v : nts) {
      if (!set_contains(aux.b, v)) continue;
      VertexSet marked, unmarked;
      for (Vertex t : terminal_nbrs(v)) (g.marked(v, t) ? marked : unmarked).push_back(t);
      if (marked.size() != 1 || unmarked.size() != 1) continue;
      stats_.fire("split.step5");
      const Vertex t = marked.front();
      return branch(inst, trail, depth,
                    {[v](Instance& in) { return hide_nonterminal(in, v); },
                     [t](Instance& in) { return hide_terminal(in, t); }},
                    {Measure::whole(1), Measure::third(4)});
    }

    for (Vertex v : nts) {
      bool loose = false;
      for (Vertex t : terminal_nbrs(v)) loose = loose || !g.marked(v, t);
      if (!loose) continue;
      stats_.fire("split.step6");
      return branch(inst, trail, depth,
                    {[v](Instance& in) {
                       delete_vertices(in, {v}, 1);
                       return VertexSet{v};
                     },
                     [v](Instance& in) { return hide_nonterminal(in, v); }},
                    {Measure::whole(1), Measure::third(4)});
    }

    stats_.split_final_state.record(terms == aux.a);
    return fallback(inst, trail, depth);
  }
}

class SplitSearch {
public:
  explicit SplitSearch(SolveStats& stats) : stats_(stats) {}
  std::optional<VertexSet> run(Instance& inst, int depth);

private:
  SolveStats& stats_;
};

std::optional<VertexSet> SplitSearch::run(Instance& inst, int depth) {
  stats_.enter(depth);
  if (inst.budget() < 0) return std::nullopt;
  auto part = split_partition(inst.graph());
  if (!part) throw std::logic_error("split wrapper: graph stopped being split");
  const VertexSet& clique = part->clique;

  if (static_cast<int>(clique.size()) <= 2 * kWrapperConstant) {
    stats_.fire("split.wrapper.brute_force");
    return brute_force_split(inst, clique, part->independent);
  }

  for (Vertex t : clique) {
    if (!inst.is_terminal(t)) continue;
    stats_.fire("split.wrapper.branch");
    VertexSet rest = clique;
    set_erase(rest, t);
    const std::size_t half = rest.size() / 2 + rest.size() % 2;
    VertexSet first(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(half));
    VertexSet second(rest.begin() + static_cast<std::ptrdiff_t>(half), rest.end());
    for (const VertexSet& pick : {VertexSet{t}, first, second}) {
      auto cp = inst.checkpoint();
      delete_vertices(inst, pick, static_cast<int>(pick.size()));
      auto sub = run(inst, depth + 1);
      inst.rollback(cp);
      if (sub) return set_union(*sub, pick);
    }
    return std::nullopt;
  }

  stats_.fire("split.wrapper.reduce");
  std::vector<Vertex> origin;
  Instance good = complete_to_good(inst, origin);
  DmReduction dm = dm_reduce(good, good.terminals());
  if (dm.changed) stats_.fire("split.dm_reduction", static_cast<std::uint64_t>(dm.rounds));
  auto sub = search_good(good, stats_, depth + 1);
  if (!sub) return std::nullopt;
  return map_back(set_union(*sub, dm.committed), inst.graph().capacity(), origin);
}

} // namespace

std::optional<VertexSet> search_good(Instance& inst, SolveStats& stats, int depth) {
  stats.fire("split.good_alg");
  stats.goodness.record(is_good(inst));
  const std::uint64_t before = stats.nodes;
  const double n = inst.graph().num_vertices();
  const Measure mu = measure(inst);
  GoodSearch search(stats);
  auto res = search.run(inst, depth);
  const double used = static_cast<double>(stats.nodes - before);
  stats.good_bound.record(used <= 10.0 * std::max(1.0, n * n) * std::pow(1.820, mu.value()));
  return res;
}

std::optional<VertexSet> search_split(Instance& inst, SolveStats& stats, int depth) {
  SplitSearch search(stats);
  return search.run(inst, depth);
}

} // namespace detail

namespace {

template <class F>
SolveOutcome certified(const Instance& inst, F&& search) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  Instance work = inst;
  work.clear_history();
  auto sol = search(work, out.stats);
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (sol) {
    if (static_cast<int>(sol->size()) > inst.budget() || !verify_solution(inst, *sol))
      throw std::logic_error("solver produced an invalid solution");
    out.yes = true;
    out.solution = std::move(*sol);
  }
  return out;
}

} // namespace

SolveOutcome good_alg(const Instance& inst) {
  if (auto why = good_defect(inst)) throw std::invalid_argument("good_alg: instance is not good: " + *why);
  return certified(inst, [](Instance& w, SolveStats& st) { return detail::search_good(w, st, 0); });
}

SolveOutcome solve_split(const Instance& inst) {
  if (!split_partition(inst.graph())) throw std::invalid_argument("solve_split: graph is not split");
  return certified(inst, [](Instance& w, SolveStats& st) { return detail::search_split(w, st, 0); });
}

} // namespace sfvs
