#include "sfvs/chordal_solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/dm_reduction.hpp"
#include "sfvs/split_solver.hpp"

namespace sfvs {

std::string ThinCheck::describe() const {
  std::string out;
  auto add = [&](bool ok, const char* what) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += what;
  };
  add(marks_form_matching, "marks not a matching");
  add(no_isolated_vertex, "isolated vertex");
  add(simplicial_cliques_large, "simplicial clique below 4");
  add(unique_simplicial_terminal, "simplicial clique without a unique simplicial terminal");
  add(small_separators_leave_large_parts, "small separator with a part below 5");
  return out.empty() ? "thin" : out;
}

ThinCheck check_thin(const Instance& inst) {
  const Graph& g = inst.graph();
  ThinCheck c;
  for (Vertex v : g.vertices()) {
    if (g.marked_neighbors(v).size() > 1) c.marks_form_matching = false;
    if (g.degree(v) == 0) c.no_isolated_vertex = false;
  }
  const VertexSet simp = simplicial_vertices(g);
  for (Vertex v : simp) {
    VertexSet q = g.neighbors(v);
    set_insert(q, v);
    if (q.size() < 4) c.simplicial_cliques_large = false;
    int terms = 0;
    for (Vertex x : q) terms += inst.is_terminal(x) ? 1 : 0;
    if (set_intersection(simp, q).size() != 1 || terms != 1 || !inst.is_terminal(v))
      c.unique_simplicial_terminal = false;
  }
  const CliqueTree forest = build_clique_forest(g);
  for (const auto& e : forest.edges) {
    if (e.weight > 2) continue;
    for (const VertexSet& part : connected_components(g, forest.separator(e)))
      if (part.size() < 5) c.small_separators_leave_large_parts = false;
  }
  return c;
}

VertexSet inner_terminals(const Instance& inst) {
  VertexSet out;
  for (Vertex t : inst.terminals())
    if (!is_simplicial(inst.graph(), t)) out.push_back(t);
  return out;
}

std::optional<int> component_min_solution_leq(const Instance& inst, const VertexSet& z, int bound, VertexSet* witness) {
  const Instance sub = inst.induced(z);
  std::vector<std::vector<Vertex>> cons;
  for (auto [a, b] : sub.graph().marked_edges()) cons.push_back({a, b});
  for (const Triangle& t : enumerate_t_triangles(sub)) cons.push_back({t[0], t[1], t[2]});

  std::vector<char> taken(sub.graph().capacity(), 0);
  std::vector<Vertex> picked;
  auto dfs = [&](auto&& self, int left) -> bool {
    const std::vector<Vertex>* open = nullptr;
    for (const auto& c : cons) {
      bool hit = false;
      for (Vertex x : c) hit = hit || taken[x];
      if (!hit) {
        open = &c;
        break;
      }
    }
    if (!open) return true;
    if (left == 0) return false;
    for (Vertex x : *open) {
      taken[x] = 1;
      picked.push_back(x);
      if (self(self, left - 1)) return true;
      picked.pop_back();
      taken[x] = 0;
    }
    return false;
  };
  for (int d = 0; d <= bound; ++d)
    if (dfs(dfs, d)) {
      if (witness) *witness = make_set(picked);
      return d;
    }
  return std::nullopt;
}

Instance reduce_thin_to_good(const Instance& inst, std::vector<Vertex>* origin) {
  if (!inner_terminals(inst).empty()) throw std::invalid_argument("reduce_thin_to_good: instance has inner terminals");
  std::vector<Vertex> local;
  return detail::complete_to_good(inst, origin ? *origin : local);
}

namespace {

bool branching_ok(const std::vector<Branch>& branches) {
  std::vector<int> d;
  for (const auto& b : branches) d.push_back(b.decrement());
  std::sort(d.begin(), d.end());
  return d.size() >= 2 && d[0] >= 1 && d[1] >= 2;
}

VertexSet closed_nbhd(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  set_insert(out, v);
  return out;
}

// True when z already is the gadget.
bool is_gadget(const Instance& inst, const VertexSet& z, std::vector<GadgetTerminal> gadget) {
  if (z.size() != gadget.size()) return false;
  const Graph& g = inst.graph();
  std::vector<GadgetTerminal> have;
  for (Vertex x : z) {
    if (!inst.is_terminal(x)) return false;
    for (Vertex w : g.neighbors(x))
      if (set_contains(z, w)) return false;
    have.push_back({g.neighbors(x), g.marked_neighbors(x)});
  }
  std::sort(have.begin(), have.end());
  std::sort(gadget.begin(), gadget.end());
  return have == gadget;
}

bool separator_rule(Instance& inst, Trail& trail, SolveStats& stats) {
  const Graph& g = inst.graph();
  const CliqueTree forest = build_clique_forest(g);
  for (int width : {1, 2}) {
    for (const auto& e : forest.edges) {
      if (e.weight != width) continue;
      const VertexSet q = forest.separator(e);
      for (const VertexSet& z : connected_components(g, q)) {
        bool touches = false;
        for (Vertex x : z)
          for (Vertex w : g.neighbors(x)) touches = touches || set_contains(q, w);
        if (!touches) continue;
        VertexSet w0;
        auto s1 = component_min_solution_leq(inst, z, 5, &w0);
        if (!s1) continue;
        const int masks = 1 << q.size();
        std::vector<int> extra(masks, 0);
        std::vector<VertexSet> wit(masks);
        wit[0] = w0;
        for (int m = 1; m < masks; ++m) {
          VertexSet keep = z;
          for (std::size_t i = 0; i < q.size(); ++i)
            if ((m >> i) & 1) set_insert(keep, q[i]);
          auto s = component_min_solution_leq(inst, keep, *s1 + static_cast<int>(q.size()), &wit[m]);
          if (!s) throw std::logic_error("separator gadget: adding separator vertices raised the cost too much");
          extra[m] = *s - *s1;
        }
        std::vector<GadgetTerminal> gadget = separator_gadget(q, extra);
        if (z.size() < gadget.size() || is_gadget(inst, z, gadget)) continue;

        inst.delete_vertices(z);
        inst.adjust_budget(-*s1);
        VertexSet added;
        for (const auto& gv : gadget) {
          Vertex t = inst.add_vertex(true);
          for (Vertex x : gv.nbrs) inst.add_edge(t, x, set_contains(gv.marked, x));
          added.push_back(t);
        }
        trail.fixup([added, q, wit](VertexSet& s) {
          int m = 0;
          for (std::size_t i = 0; i < q.size(); ++i)
            if (!set_contains(s, q[i])) m |= 1 << i;
          s = set_union(set_difference(s, added), wit[m]);
        });
        stats.fire("chordal.step8");
        stats.fire(q.size() == 1 ? "chordal.step8.width1" : "chordal.step8.width2");
        return true;
      }
    }
  }
  return false;
}

enum class StepKind { none, reduced, branch };

StepKind part1_step(Instance& inst, Trail& trail, SolveStats& stats, Part1Result& out) {
  const Graph& g = inst.graph();

  VertexSet idle;
  for (Vertex v : g.vertices())
    if (!in_constraint(inst, v)) idle.push_back(v);
  if (!idle.empty()) {
    stats.fire("chordal.step1");
    inst.delete_vertices(idle);
    return StepKind::reduced;
  }

  bool cut = false;
  for (auto [a, b] : bridges(g))
    if (!g.marked(a, b)) {
      inst.remove_edge(a, b);
      cut = true;
    }
  if (cut) {
    stats.fire("chordal.step2");
    return StepKind::reduced;
  }

  const VertexSet vs = g.vertices();
  for (Vertex v : vs)
    if (g.marked_neighbors(v).size() >= 2) {
      stats.fire("chordal.step3");
      out.rule = "chordal.step3";
      out.branches = {Branch{{v}}, Branch{g.marked_neighbors(v)}};
      return StepKind::branch;
    }

  for (Vertex v : vs) {
    if (g.degree(v) != 2 || !g.marked_neighbors(v).empty()) continue;
    const Vertex a = g.neighbors(v)[0], b = g.neighbors(v)[1];
    if (!g.adjacent(a, b)) continue;
    stats.fire("chordal.step4");
    inst.mark(a, b);
    inst.delete_vertex(v);
    return StepKind::reduced;
  }

  for (Vertex v : vs) {
    if (g.degree(v) > 2 || g.marked_neighbors(v).empty()) continue;
    stats.fire("chordal.step5");
    const Vertex u = g.marked_neighbors(v).front();
    delete_vertices(inst, {u}, 1);
    trail.commit(u);
    return StepKind::reduced;
  }

  for (auto [a, b] : g.marked_edges())
    for (auto [v, u] : {Edge{a, b}, Edge{b, a}}) {
      if (inst.is_terminal(v) && !inst.is_terminal(u)) continue;
      if (!set_includes(closed_nbhd(g, u), closed_nbhd(g, v))) continue;
      stats.fire("chordal.step6");
      delete_vertices(inst, {u}, 1);
      trail.commit(u);
      return StepKind::reduced;
    }

  for (Vertex v : vs) {
    if (!is_simplicial(g, v)) continue;
    const VertexSet q = closed_nbhd(g, v);
    if (q.size() < 4) continue;
    Vertex t = -1;
    for (Vertex x : q)
      if (x != v && inst.is_terminal(x)) {
        t = x;
        break;
      }
    if (t < 0) continue;
    stats.fire("chordal.step7");
    out.rule = "chordal.step7";
    out.branches = {Branch{{t}}, Branch{set_difference(q, make_set({t, v}))}};
    return StepKind::branch;
  }

  if (separator_rule(inst, trail, stats)) return StepKind::reduced;
  return StepKind::none;
}

class WholeSolver {
public:
  explicit WholeSolver(SolveStats& stats) : stats_(stats) {}

  std::optional<VertexSet> decide(Instance& inst, int depth);
  std::optional<VertexSet> decide_induced(const Instance& inst, const VertexSet& keep, int budget, int depth) {
    Instance sub = inst.induced(keep);
    sub.set_budget(budget);
    sub.clear_history();
    return decide(sub, depth);
  }
  bool evaluate(const Instance& inst, DividingContext& ctx, int depth);

private:
  std::optional<VertexSet> explore(Instance& inst, const Trail& trail, const std::vector<Branch>& branches, int depth);
  std::optional<VertexSet> to_split(Instance& inst, const Trail& trail, int depth);
  std::vector<Branch> fallback(const Instance& inst) {
    ++stats_.fallbacks;
    std::vector<Branch> out;
    for (VertexSet& pick : constraint_branches(inst)) out.push_back(Branch{std::move(pick)});
    return out;
  }

  SolveStats& stats_;
};

std::optional<VertexSet> WholeSolver::explore(Instance& inst, const Trail& trail, const std::vector<Branch>& branches,
                                              int depth) {
  for (const Branch& br : branches) {
    auto cp = inst.checkpoint();
    delete_vertices(inst, br.commit, static_cast<int>(br.commit.size()));
    inst.delete_vertices(br.discard);
    inst.adjust_budget(-br.discard_cost);
    VertexSet hidden;
    if (br.hide) hidden = hide_nonterminal(inst, *br.hide);
    auto sub = decide(inst, depth + 1);
    inst.rollback(cp);
    if (!sub) continue;
    VertexSet s = set_union(set_union(*sub, hidden), br.commit);
    if (br.extra) s = set_union(s, br.extra(s));
    return trail.finish(std::move(s));
  }
  return std::nullopt;
}

std::optional<VertexSet> WholeSolver::to_split(Instance& inst, const Trail& trail, int depth) {
  for (Vertex t : inst.terminals())
    for (Vertex w : inst.graph().neighbors(t))
      if (inst.is_terminal(w)) return explore(inst, trail, fallback(inst), depth);
  stats_.fire("chordal.step9");
  std::vector<Vertex> origin;
  Instance good = detail::complete_to_good(inst, origin);
  DmReduction dm = dm_reduce(good, good.terminals());
  if (dm.changed) stats_.fire("split.dm_reduction", static_cast<std::uint64_t>(dm.rounds));
  auto sub = detail::search_good(good, stats_, depth + 1);
  if (!sub) return std::nullopt;
  return trail.finish(detail::map_back(set_union(*sub, dm.committed), inst.graph().capacity(), origin));
}

bool WholeSolver::evaluate(const Instance& inst, DividingContext& ctx, int depth) {
  const int k = inst.budget();
  ctx.s0 = -1;
  for (int b = 0; b <= k && ctx.s0 < 0; ++b)
    if (auto w = decide_induced(inst, ctx.x0, b, depth + 1)) {
      ctx.s0 = b;
      ctx.witness0 = *w;
    }
  if (ctx.s0 < 0) return false;
  ctx.sizes.assign(ctx.others.size(), -1);
  ctx.witnesses.assign(ctx.others.size(), {});
  ctx.u0.clear();
  ctx.u1.clear();
  for (std::size_t i = 0; i < ctx.others.size(); ++i) {
    VertexSet keep = ctx.x0;
    set_insert(keep, ctx.others[i]);
    for (int b = ctx.s0; b <= k && ctx.sizes[i] < 0; ++b)
      if (auto w = decide_induced(inst, keep, b, depth + 1)) {
        ctx.sizes[i] = b;
        ctx.witnesses[i] = *w;
      }
    if (ctx.sizes[i] < 0) return false;
    stats_.division.record(ctx.sizes[i] <= ctx.s0 + 1);
    if (ctx.sizes[i] == ctx.s0) ctx.u0.push_back(ctx.others[i]);
    if (ctx.sizes[i] == ctx.s0 + 1) ctx.u1.push_back(ctx.others[i]);
  }
  return true;
}

std::optional<VertexSet> WholeSolver::decide(Instance& inst, int depth) {
  stats_.enter(depth);
  RollbackGuard guard(inst);
  Trail trail;
  while (true) {
    if (inst.budget() < 0) return std::nullopt;
    Part1Result step;
    StepKind kind = part1_step(inst, trail, stats_, step);
    if (kind == StepKind::reduced) continue;
    if (kind == StepKind::branch) {
      stats_.branching.record(branching_ok(step.branches));
      return explore(inst, trail, step.branches, depth);
    }
    break;
  }

  stats_.thin.record(check_thin(inst).ok());
  if (!has_constraint(inst)) return trail.finish({});
  if (inner_terminals(inst).empty()) return to_split(inst, trail, depth);

  auto ctx = find_dividing_separator(inst);
  bool found = ctx.has_value();
  if (found) {
    bool simplicial_left = false;
    for (Vertex x : set_difference(ctx->component, ctx->q1)) simplicial_left = simplicial_left || is_simplicial(inst.graph(), x);
    found = simplicial_left;
  }
  stats_.dividing.record(found);
  if (!ctx) return explore(inst, trail, fallback(inst), depth);

  if (!evaluate(inst, *ctx, depth)) {
    stats_.fire("chordal.step10");
    return std::nullopt;
  }
  stats_.fire("chordal.step10");
  std::string rule;
  std::vector<Branch> branches = divide_and_conquer(inst, *ctx, stats_, rule);
  if (rule == "fallback") {
    ++stats_.fallbacks;
  } else {
    stats_.fire(rule);
    stats_.branching.record(branching_ok(branches));
  }
  return explore(inst, trail, branches, depth);
}

} // namespace

std::vector<GadgetTerminal> separator_gadget(const VertexSet& q, const std::vector<int>& extra) {
  if (q.size() == 1 && extra.size() == 2) {
    const Vertex v = q[0];
    if (extra[1] == 0) return {};
    if (extra[1] == 1) return {{{v}, {v}}};
  } else if (q.size() == 2 && extra.size() == 4) {
    const Vertex a = q[0], b = q[1];
    const int da = extra[1], db = extra[2], dab = extra[3];
    if (da == 0 && db == 0 && dab == 0) return {};
    if (da == 0 && db == 0 && dab == 1) return {{{a, b}, {}}};
    if (da == 0 && db == 1 && dab == 1) return {{{a, b}, {b}}};
    if (da == 1 && db == 0 && dab == 1) return {{{a, b}, {a}}};
    if (da == 1 && db == 1 && dab == 1) return {{{a, b}, {a, b}}};
    if (da == 1 && db == 1 && dab == 2) return {{{a}, {a}}, {{b}, {b}}};
  }
  throw std::logic_error("separator gadget: cost profile matches no case");
}

Part1Result apply_part1(Instance& inst, SolveStats& stats) {
  Part1Result res;
  while (true) {
    if (inst.budget() < 0) {
      res.kind = Part1Result::Kind::no;
      return res;
    }
    StepKind kind = part1_step(inst, res.trail, stats, res);
    if (kind == StepKind::reduced) continue;
    res.kind = kind == StepKind::branch ? Part1Result::Kind::branch : Part1Result::Kind::fixpoint;
    return res;
  }
}

std::optional<DividingContext> make_dividing_context(const Instance& inst, const VertexSet& q1, const VertexSet& q2) {
  const Graph& g = inst.graph();
  DividingContext ctx;
  ctx.q1 = q1;
  ctx.q2 = q2;
  ctx.separator = set_intersection(q1, q2);
  if (ctx.separator.empty() || ctx.separator.size() == q1.size()) return std::nullopt;
  const VertexSet inner = inner_terminals(inst);
  const VertexSet hats = set_intersection(ctx.separator, inner);
  if (hats.empty()) return std::nullopt;
  ctx.hat = hats.front();
  const Vertex probe = set_difference(q1, ctx.separator).front();
  for (VertexSet& part : connected_components(g, ctx.separator))
    if (set_contains(part, probe)) ctx.component = std::move(part);
  if (!set_intersection(ctx.component, inner).empty()) return std::nullopt;
  VertexSet outside = set_difference(ctx.component, q1);
  if (outside.empty()) return std::nullopt;
  ctx.x0 = outside;
  set_insert(ctx.x0, ctx.hat);
  ctx.others = q1;
  set_erase(ctx.others, ctx.hat);
  return ctx;
}

std::vector<DividingContext> dividing_candidates(const Instance& inst) {
  std::vector<DividingContext> out;
  const CliqueTree forest = build_clique_forest(inst.graph());
  for (const auto& e : forest.edges) {
    if (auto c = make_dividing_context(inst, forest.cliques[e.a], forest.cliques[e.b])) out.push_back(std::move(*c));
    if (auto c = make_dividing_context(inst, forest.cliques[e.b], forest.cliques[e.a])) out.push_back(std::move(*c));
  }
  return out;
}

std::optional<DividingContext> find_dividing_separator(const Instance& inst) {
  auto all = dividing_candidates(inst);
  if (all.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].component.size() > all[best].component.size()) best = i;
  return std::move(all[best]);
}

bool evaluate_division(const Instance& inst, DividingContext& ctx, SolveStats& stats) {
  WholeSolver solver(stats);
  return solver.evaluate(inst, ctx, 0);
}

std::vector<Branch> divide_and_conquer(const Instance& inst, const DividingContext& ctx, SolveStats& stats,
                                       std::string& rule) {
  const Graph& g = inst.graph();
  const Vertex hat = ctx.hat;
  VertexSet rest0 = ctx.x0;
  set_erase(rest0, hat);
  const int s0 = ctx.s0;

  if (s0 + static_cast<int>(ctx.u1.size()) >= 2) {
    rule = "chordal.step11";
    Branch drop_side{ctx.u1, rest0, s0, hat};
    drop_side.extra = [u0 = ctx.u0, others = ctx.others, w0 = ctx.witness0, ws = ctx.witnesses](const VertexSet& s) {
      VertexSet missing = set_difference(u0, s);
      if (missing.empty()) return w0;
      if (missing.size() > 1) throw std::logic_error("division: more than one separator vertex left uncovered");
      auto it = std::lower_bound(others.begin(), others.end(), missing.front());
      return ws[static_cast<std::size_t>(it - others.begin())];
    };
    return {Branch{{hat}}, std::move(drop_side)};
  }

  if (s0 + static_cast<int>(ctx.q1.size()) >= 4) {
    const VertexSet candidates = set_difference(ctx.u0, ctx.separator);
    if (!candidates.empty()) {
      rule = "chordal.step12";
      const Vertex vi = candidates.front();
      auto it = std::lower_bound(ctx.others.begin(), ctx.others.end(), vi);
      const VertexSet wi = ctx.witnesses[static_cast<std::size_t>(it - ctx.others.begin())];
      Branch drop_side{set_difference(ctx.q1, make_set({hat, vi})), rest0, s0};
      drop_side.extra = [wi](const VertexSet&) { return wi; };
      return {Branch{{hat}}, std::move(drop_side)};
    }
  }

  const VertexSet outside = set_difference(ctx.component, ctx.q1);
  bool fish = s0 == 0 && ctx.u1.size() == 1 && ctx.u1 == set_difference(ctx.q1, ctx.separator) && !outside.empty();
  for (Vertex x : outside) fish = fish && is_simplicial(g, x);
  stats.fish.record(fish);
  if (!fish) {
    rule = "fallback";
    std::vector<Branch> out;
    for (VertexSet& pick : constraint_branches(inst)) out.push_back(Branch{std::move(pick)});
    return out;
  }
  rule = "chordal.step13";
  const Vertex v1 = ctx.u1.front();
  for (Vertex u : g.marked_neighbors(v1))
    if (u != hat) return {Branch{{v1}}, Branch{make_set({hat, u})}};
  return {Branch{{hat}}, Branch{set_difference(set_union(ctx.q1, ctx.q2), ctx.separator)}};
}

namespace detail {

std::optional<VertexSet> search_chordal(Instance& inst, SolveStats& stats, int depth) {
  WholeSolver solver(stats);
  return solver.decide(inst, depth);
}

} // namespace detail

namespace {

SolveOutcome run_certified(const Instance& inst, int budget) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  Instance work = inst;
  work.set_budget(budget);
  work.clear_history();
  auto sol = detail::search_chordal(work, out.stats, 0);
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (sol) {
    if (static_cast<int>(sol->size()) > budget || !verify_solution(inst, *sol))
      throw std::logic_error("chordal solver produced an invalid solution");
    out.yes = true;
    out.solution = std::move(*sol);
  }
  return out;
}

void require_chordal(const Instance& inst) {
  if (!is_chordal(inst.graph()).chordal) throw std::invalid_argument("solve_chordal: graph is not chordal");
}

} // namespace

SolveOutcome solve_chordal(const Instance& inst) {
  require_chordal(inst);
  return run_certified(inst, inst.budget());
}

SolveOutcome minimize_chordal(const Instance& inst, int cap) {
  require_chordal(inst);
  SolveStats total;
  for (int b = 0; b <= cap; ++b) {
    SolveOutcome o = run_certified(inst, b);
    total.merge(o.stats);
    if (o.yes) {
      o.stats = total;
      return o;
    }
  }
  SolveOutcome none;
  none.stats = total;
  return none;
}

} // namespace sfvs
