#include "sfvs/stats.hpp"

#include <algorithm>

#include <json.hpp>

namespace sfvs {

void SolveStats::fire(std::string_view rule, std::uint64_t times) {
  auto it = firings.find(rule);
  if (it == firings.end()) it = firings.emplace(std::string(rule), 0).first;
  it->second += times;
}

std::uint64_t SolveStats::fired(std::string_view rule) const {
  auto it = firings.find(rule);
  return it == firings.end() ? 0 : it->second;
}

void SolveStats::enter(int depth) {
  ++nodes;
  peak_depth = std::max(peak_depth, depth);
}

namespace {

void add(Check& into, const Check& from) {
  into.checked += from.checked;
  into.failed += from.failed;
}

nlohmann::json check_json(const Check& c) { return {{"checked", c.checked}, {"failed", c.failed}}; }

} // namespace

void SolveStats::merge(const SolveStats& o) {
  nodes += o.nodes;
  peak_depth = std::max(peak_depth, o.peak_depth);
  wall_ms += o.wall_ms;
  for (const auto& [k, v] : o.firings) fire(k, v);
  add(measure, o.measure);
  add(branching, o.branching);
  add(thin, o.thin);
  add(fish, o.fish);
  add(division, o.division);
  add(split_precondition, o.split_precondition);
  add(split_final_state, o.split_final_state);
  add(goodness, o.goodness);
  add(dividing, o.dividing);
  add(good_bound, o.good_bound);
  add(exact_branch, o.exact_branch);
  fallbacks += o.fallbacks;
}

std::uint64_t SolveStats::violations() const {
  return measure.failed + branching.failed + thin.failed + fish.failed + division.failed +
         split_final_state.failed + goodness.failed + dividing.failed + exact_branch.failed + fallbacks;
}

std::string SolveStats::to_json() const {
  nlohmann::json j;
  j["nodes"] = nodes;
  j["peak_depth"] = peak_depth;
  j["wall_ms"] = wall_ms;
  j["firings"] = nlohmann::json::object();
  for (const auto& [k, v] : firings) j["firings"][k] = v;
  j["checks"] = {{"measure", check_json(measure)},
                 {"branching", check_json(branching)},
                 {"thin", check_json(thin)},
                 {"fish", check_json(fish)},
                 {"division", check_json(division)},
                 {"split_precondition", check_json(split_precondition)},
                 {"split_final_state", check_json(split_final_state)},
                 {"goodness", check_json(goodness)},
                 {"dividing", check_json(dividing)},
                 {"good_bound", check_json(good_bound)},
                 {"exact_branch", check_json(exact_branch)}};
  j["fallbacks"] = fallbacks;
  return j.dump();
}

} // namespace sfvs
