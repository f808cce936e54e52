#include <doctest.h>

#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/chordal_solver.hpp"
#include "sfvs/generators.hpp"
#include "sfvs/rng.hpp"

using namespace sfvs;

TEST_SUITE("generators") {
  TEST_CASE("rng is deterministic and in range") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    for (int i = 0; i < 1000; ++i) {
      CHECK(c.below(7) < 7);
      const double u = c.unit();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
  }

  TEST_CASE("same seed, same instance") {
    CHECK(gen_chordal(12, 0.5, 0.3, 0.1, 3, 9).canonical() == gen_chordal(12, 0.5, 0.3, 0.1, 3, 9).canonical());
    CHECK(gen_chordal(12, 0.5, 0.3, 0.1, 3, 9).canonical() != gen_chordal(12, 0.5, 0.3, 0.1, 3, 10).canonical());
    CHECK(gen_split(5, 6, 0.5, 0.3, 0.1, 2, 4).canonical() == gen_split(5, 6, 0.5, 0.3, 0.1, 2, 4).canonical());
  }

  TEST_CASE("chordal generator edge cases") {
    const Instance one = gen_chordal(1, 0.5, 1.0, 0.0, 0, 1);
    CHECK(one.graph().num_vertices() == 1);
    CHECK(one.graph().num_edges() == 0);
    const Instance k4 = gen_chordal(4, 1.0, 0.0, 0.0, 0, 3);
    CHECK(k4.graph().num_edges() == 6);
    CHECK_THROWS_AS(gen_chordal(0, 0.5, 0.1, 0.1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_chordal(5, 1.5, 0.1, 0.1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_chordal(5, 0.5, 0.1, 0.1, -1, 1), std::invalid_argument);
  }

  TEST_CASE("chordal generator output is chordal and connected") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Instance inst = gen_chordal(1 + static_cast<int>(seed % 20), 0.4, 0.3, 0.2, 2, seed);
      CHECK(is_chordal(inst.graph()).chordal);
      CHECK(connected_components(inst.graph()).size() == 1);
      CHECK(inst.budget() == 2);
    }
  }

  TEST_CASE("split generator output is split") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int nc = 1 + static_cast<int>(seed % 8), ni = static_cast<int>(seed % 7);
      const Instance inst = gen_split(nc, ni, 0.5, 0.3, 0.2, 1, seed);
      CHECK(inst.graph().num_vertices() == nc + ni);
      CHECK(split_partition(inst.graph()).has_value());
      for (Vertex a = 0; a < nc; ++a)
        for (Vertex b = a + 1; b < nc; ++b) CHECK(inst.graph().adjacent(a, b));
      for (Vertex a = nc; a < nc + ni; ++a)
        for (Vertex b = a + 1; b < nc + ni; ++b) CHECK_FALSE(inst.graph().adjacent(a, b));
    }
    CHECK(gen_split(4, 0, 0.5, 0.3, 0.2, 1, 1).graph().num_edges() == 6);
    CHECK(gen_split(4, 5, 0.0, 0.3, 0.2, 1, 1).graph().num_edges() == 6);
    CHECK_THROWS_AS(gen_split(-1, 0, 0.5, 0.3, 0.2, 1, 1), std::invalid_argument);
  }

  TEST_CASE("structured kinds show their structure") {
    CHECK(parse_structured_kind("fish") == StructuredKind::fish);
    CHECK(to_string(StructuredKind::separator2) == "separator2");
    CHECK_THROWS_AS(parse_structured_kind("whale"), std::invalid_argument);
    const std::pair<StructuredKind, const char*> kinds[] = {{StructuredKind::fish, "chordal.step13"},
                                                            {StructuredKind::separator1, "chordal.step8.width1"},
                                                            {StructuredKind::separator2, "chordal.step8.width2"}};
    for (auto [kind, rule] : kinds)
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Instance inst = gen_structured(kind, StructuredParams{}, seed);
        CHECK(is_chordal(inst.graph()).chordal);
        CHECK(inst.canonical() == gen_structured(kind, StructuredParams{}, seed).canonical());
        CHECK(solve_chordal(inst).stats.fired(rule) >= 1);
      }
    const Instance inner = gen_structured(StructuredKind::inner_terminal, StructuredParams{}, 0);
    CHECK(find_dividing_separator(inner).has_value());
  }
}
