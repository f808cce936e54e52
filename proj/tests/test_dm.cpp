#include <doctest.h>

#include <stdexcept>

#include "sfvs/dm_reduction.hpp"
#include "sfvs/generators.hpp"
#include "sfvs/matching.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/split_solver.hpp"
#include "support.hpp"

using namespace sfvs;
using sfvs::testing::Builder;
using sfvs::testing::left_id;
using sfvs::testing::right_id;

namespace {

VertexSet lefts(std::initializer_list<int> is) {
  std::vector<Vertex> out;
  for (int i : is) out.push_back(left_id(i));
  return make_set(out);
}
VertexSet rights(std::initializer_list<int> is) {
  std::vector<Vertex> out;
  for (int i : is) out.push_back(right_id(i));
  return make_set(out);
}

bool is_matching(const BipartiteGraph& f, const Matching& m) {
  VertexSet used;
  for (auto [a, b] : m) {
    if (std::find(f.edges.begin(), f.edges.end(), std::make_pair(a, b)) == f.edges.end()) return false;
    if (set_contains(used, a) || set_contains(used, b)) return false;
    set_insert(used, a);
    set_insert(used, b);
  }
  return true;
}

} // namespace

TEST_SUITE("dm") {
  TEST_CASE("matching examples") {
    BipartiteGraph one{{0}, {1}, {{0, 1}}};
    CHECK(max_matching(one) == Matching{{0, 1}});

    BipartiteGraph k33{{0, 1, 2}, {3, 4, 5}, {}};
    for (Vertex a : k33.left)
      for (Vertex b : k33.right) k33.edges.push_back({a, b});
    CHECK(max_matching(k33).size() == 3);

    const BipartiteGraph f = sfvs::testing::dm_example();
    const Matching m = max_matching(f);
    CHECK(m.size() == 6);
    CHECK(is_matching(f, m));
  }

  TEST_CASE("decomposition of the drawn example") {
    const DMResult dm = dm_decompose(sfvs::testing::dm_example());
    CHECK(dm.c == set_union(lefts({6, 7}), rights({5, 6, 7})));
    CHECK(dm.h == set_union(lefts({4, 5}), rights({4})));
    CHECK(dm.r == set_union(lefts({1, 2, 3}), rights({1, 2, 3})));
  }

  TEST_CASE("decomposition of tiny graphs") {
    const DMResult edge = dm_decompose({{0}, {1}, {{0, 1}}});
    CHECK(edge.c.empty());
    CHECK(edge.h.empty());
    CHECK(edge.r == VertexSet{0, 1});

    const DMResult star = dm_decompose({{0, 1}, {2}, {{0, 2}, {1, 2}}});
    CHECK(star.c == VertexSet{0, 1});
    CHECK(star.h == VertexSet{2});
    CHECK(star.r.empty());
  }

  TEST_CASE("H is the intersection of all minimum vertex covers") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      const BipartiteGraph f = sfvs::testing::random_bipartite(seed, 7, 0.15 + 0.05 * static_cast<double>(seed % 8));
      const DMResult dm = dm_decompose(f);
      const auto covers = sfvs::testing::minimum_vertex_covers(f);
      VertexSet common = covers.front();
      for (const auto& c : covers) common = set_intersection(common, c);
      REQUIRE(dm.h == common);
      CHECK(sfvs::testing::check_dm_clauses(f, dm) == "");
      CHECK(dm.matching.size() == dm.h.size() + dm.r.size() / 2);
      CHECK(dm.matching.size() == covers.front().size());
    }
  }

  TEST_CASE("auxiliary subgraph") {
    const Builder b = sfvs::testing::delete_example();
    const Instance inst = b.build();
    const AuxiliaryBipartite aux = build_auxiliary(inst, inst.terminals());
    CHECK(aux.a == b.set({"t1", "t2", "t3"}));
    CHECK(aux.b == b.set({"u1", "u2", "u3", "u4", "v"}));

    Builder plain;
    plain.clique({"u", "w"}).edge("t", "u").edge("t", "w").terminal("t");
    const Instance p = plain.build();
    CHECK(build_auxiliary(p, p.terminals()).a.empty());
    CHECK(build_auxiliary(p, p.terminals()).b.empty());

    Builder mixed;
    mixed.clique({"u", "w"}).marked("t", "u").edge("t", "w").terminal("t");
    const Instance mx = mixed.build();
    CHECK_FALSE(set_contains(build_auxiliary(mx, mx.terminals()).a, mixed["t"]));
  }

  TEST_CASE("reduction after deleting a vertex") {
    const Builder b = sfvs::testing::delete_example();
    Instance inst = b.build();
    delete_vertices(inst, {b["v"]}, 1);
    const int k = inst.budget();
    const AuxiliaryBipartite aux = build_auxiliary(inst, inst.terminals());
    CHECK(aux.a == b.set({"t1", "t2", "t3"}));
    const DMResult dm = dm_decompose(aux.f);
    const VertexSet rc = set_union(dm.r, dm.c);
    CHECK(set_intersection(aux.a, rc) == b.set({"t2", "t3"}));
    CHECK(set_intersection(aux.b, set_union(dm.r, dm.h)) == b.set({"u3", "u4"}));
    const DmReduction red = dm_reduce(inst, inst.terminals());
    CHECK(red.changed);
    // First round takes {t2, t3} and {u3, u4}; t5 then has only its
    // marked edge left and goes in the second round.
    CHECK(red.rounds == 2);
    CHECK(red.discarded == b.set({"t2", "t3", "t5"}));
    CHECK(red.committed == b.set({"u3", "u4", "u6"}));
    CHECK(inst.budget() == k - 3);
  }

  TEST_CASE("reduction after hiding a vertex") {
    const Builder b = sfvs::testing::hide_example();
    Instance inst = b.build();
    hide_nonterminal(inst, b["v"]);
    const DmReduction red = dm_reduce(inst, inst.terminals());
    CHECK(red.rounds == 2);
    CHECK(red.discarded == b.set({"t2", "t3", "t4", "t5"}));
    CHECK(red.committed == b.set({"u3", "u4", "u5", "u7"}));
  }

  TEST_CASE("reduction edge cases") {
    Builder plain;
    plain.clique({"u", "w"}).edge("t", "u").edge("t", "w").terminal("t").budget(1);
    Instance p = plain.build();
    CHECK_FALSE(dm_reduce(p, p.terminals()).changed);

    Builder star;
    star.marked("a1", "b").marked("a2", "b").terminal("a1").terminal("a2").budget(2);
    Instance s = star.build();
    const DmReduction red = dm_reduce(s, s.terminals());
    CHECK(red.discarded == star.set({"a1", "a2"}));
    CHECK(red.committed == star.set({"b"}));
    CHECK(s.budget() == 1);
    CHECK(s.graph().num_vertices() == 0);
  }

  TEST_CASE("reduction preserves the optimum") {
    int no_instances = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Instance inst = sfvs::testing::random_split_terminal_side(seed, 2 + static_cast<int>(seed % 6),
                                                                2 + static_cast<int>(seed % 7), 0.5, 0.6, 3);
      const Instance before = inst;
      const int base = *oracle_solve(before, 64).size;
      dm_reduce(inst, inst.terminals());
      CHECK_FALSE(dm_applicable(inst, inst.terminals()));
      const int dec = before.budget() - inst.budget();
      const auto after = oracle_solve(inst, 64);
      REQUIRE(after.size.has_value());
      CHECK(*after.size + dec == base);
      const AuxiliaryBipartite aux = build_auxiliary(inst, inst.terminals());
      if (static_cast<int>(aux.a.size()) > inst.budget()) {
        ++no_instances;
        CHECK(*after.size > inst.budget());
      }
    }
    CHECK(no_instances > 0);
  }
}
