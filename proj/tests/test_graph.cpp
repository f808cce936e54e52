#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/generators.hpp"
#include "sfvs/instance_io.hpp"
#include "support.hpp"

using namespace sfvs;
using sfvs::testing::Builder;

namespace {

Instance triangle_with_terminal() {
  Builder b;
  b.edge("1", "2").edge("2", "3").edge("1", "3").terminal("1");
  return b.build();
}

} // namespace

TEST_SUITE("graph") {
  TEST_CASE("t-triangles of small graphs") {
    CHECK(enumerate_t_triangles(triangle_with_terminal()) == std::vector<Triangle>{{0, 1, 2}});

    Builder path;
    path.edge("1", "2").edge("2", "3").terminal("2");
    CHECK(enumerate_t_triangles(path.build()).empty());

    Builder k4;
    k4.clique({"1", "2", "3", "4"}).terminal("1");
    const auto tris = enumerate_t_triangles(k4.build());
    CHECK(tris == std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  }

  TEST_CASE("t-triangles match all triples") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Instance inst = gen_chordal(5 + static_cast<int>(seed % 16), 0.7, 0.3, 0.0, 0, seed);
      CHECK(enumerate_t_triangles(inst) == sfvs::testing::brute_triangles(inst));
    }
  }

  TEST_CASE("verify in both modes") {
    const Instance tri = triangle_with_terminal();
    CHECK(verify_solution(tri, {1}, VerifyMode::triangle));
    CHECK(verify_solution(tri, {1}, VerifyMode::cycle));

    Instance marked = tri;
    marked.mark(1, 2);
    CHECK_FALSE(verify_solution(marked, {0}));
    CHECK(first_violation(marked, {0}, VerifyMode::triangle).has_value());

    Builder c5;
    c5.edge("1", "2").edge("2", "3").edge("3", "4").edge("4", "5").edge("5", "1").terminal("1");
    const Instance cycle = c5.build();
    CHECK_FALSE(verify_solution(cycle, {}, VerifyMode::cycle));
    CHECK(verify_solution(cycle, {}, VerifyMode::triangle));

    CHECK_THROWS_AS(verify_solution(tri, {7}), std::invalid_argument);
  }

  TEST_CASE("triangle and cycle verification agree on chordal graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Instance inst = gen_chordal(6 + static_cast<int>(seed % 9), 0.6, 0.35, 0.1, 0, 100 + seed);
      const VertexSet vs = inst.graph().vertices();
      // All subsets would be slow at n = 14; every mask with stride 7 covers
      // a spread of sizes.
      for (std::uint32_t mask = 0; mask < (1u << vs.size()); mask += 7) {
        VertexSet s;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if ((mask >> i) & 1u) s.push_back(vs[i]);
        REQUIRE(verify_solution(inst, s, VerifyMode::triangle) == verify_solution(inst, s, VerifyMode::cycle));
      }
    }
  }

  TEST_CASE("delete and undo") {
    Instance inst = gen_chordal(10, 0.6, 0.3, 0.2, 4, 5);
    const std::string before = inst.canonical();
    const Vertex v = inst.graph().vertices()[3];
    const VertexSet nbrs = inst.graph().neighbors(v);
    std::vector<int> degrees;
    for (Vertex w : nbrs) degrees.push_back(inst.graph().degree(w));

    UndoToken tok = delete_vertices(inst, {v}, 1);
    CHECK(inst.budget() == 3);
    CHECK_FALSE(inst.graph().contains(v));
    for (std::size_t i = 0; i < nbrs.size(); ++i) CHECK(inst.graph().degree(nbrs[i]) == degrees[i] - 1);
    undo(inst, tok);
    CHECK(inst.canonical() == before);

    UndoToken none = delete_vertices(inst, {}, 0);
    CHECK(inst.canonical() == before);
    undo(inst, none);

    {
      RollbackGuard guard(inst);
      inst.delete_vertices(inst.graph().vertices());
      inst.add_vertex(true);
      inst.set_budget(0);
    }
    CHECK(inst.canonical() == before);
  }

  TEST_CASE("components and bridges") {
    Builder b;
    b.edge("a", "b").edge("b", "c").edge("a", "c").edge("c", "d").vertex("e");
    const Instance inst = b.build();
    const auto comps = connected_components(inst.graph());
    CHECK(comps.size() == 2);
    CHECK(connected_components(inst.graph(), {b["c"]}).size() == 3);
    CHECK(bridges(inst.graph()) == std::vector<Edge>{{b["c"], b["d"]}});
  }
}

TEST_SUITE("io") {
  TEST_CASE("parse and serialize") {
    const std::string text = "p sfvs 3 3\nk 1\ne 1 2\ne 1 3\ne 2 3\nt 1\nm 2 3\n";
    const Instance inst = parse_instance_string(text);
    CHECK(inst.graph().num_vertices() == 3);
    CHECK(inst.budget() == 1);
    CHECK(inst.is_terminal(0));
    CHECK(inst.graph().marked(1, 2));
    CHECK(serialize(inst) == text);
  }

  TEST_CASE("comments and ordering") {
    const Instance inst = parse_instance_string("# c\np sfvs 2 1\nk 0\nm 1 2\ne 2 1 # trailing\n");
    CHECK(inst.graph().marked(0, 1));
  }

  TEST_CASE("malformed input names the line") {
    auto line_of = [](const std::string& text) {
      try {
        parse_instance_string(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return -1;
    };
    CHECK(line_of("p sfvs x\n") == 1);
    CHECK(line_of("p sfvs 2 1\nk 0\ne 1 3\n") == 3);
    CHECK(line_of("p sfvs 2 1\nk 0\ne 1 1\n") == 3);
    CHECK(line_of("p sfvs 2 0\nk 0\nm 1 2\n") > 0);
    CHECK(line_of("p sfvs 2 1\ne 1 2\n") > 0);
    CHECK(line_of("k 1\np sfvs 2 0\n") == 1);
    CHECK(line_of("p sfvs 3 2\nk 0\ne 1 2\ne 2 1\n") == 4);
  }

  TEST_CASE("round trip over generated instances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Instance a = gen_chordal(3 + static_cast<int>(seed), 0.5, 0.4, 0.2, 2, seed);
      const std::string text = serialize(a);
      CHECK(serialize(parse_instance_string(text)) == text);
    }
  }

  TEST_CASE("solutions") {
    std::istringstream yes("3\n1\n");
    CHECK(parse_solution(yes) == std::optional<VertexSet>(VertexSet{0, 2}));
    std::istringstream no("NO\n");
    CHECK_FALSE(parse_solution(no).has_value());
    CHECK(serialize_solution(VertexSet{0, 4}) == "1\n5\n");
    CHECK(serialize_solution(std::nullopt) == "NO\n");
  }
}
