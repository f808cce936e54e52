#include <doctest.h>

#include <stdexcept>

#include "sfvs/generators.hpp"
#include "sfvs/oracle.hpp"
#include "support.hpp"

using namespace sfvs;
using sfvs::testing::Builder;

TEST_SUITE("oracle") {
  TEST_CASE("tiny instances") {
    Builder tri;
    tri.clique({"t", "a", "b"}).terminal("t");
    const auto r = oracle_solve(tri.build(), 5);
    CHECK(r.size == 1);
    CHECK(r.witness.size() == 1);

    Builder plain;
    plain.clique({"a", "b", "c"});
    CHECK(oracle_solve(plain.build(), 5).size == 0);

    Builder two;
    two.marked("a", "b").marked("c", "d");
    CHECK(oracle_solve(two.build(), 5).size == 2);
    CHECK_FALSE(oracle_solve(two.build(), 1).size.has_value());
  }

  TEST_CASE("cycle oracle on a chordless cycle") {
    Builder c5;
    c5.edge("a", "b").edge("b", "c").edge("c", "d").edge("d", "e").edge("e", "a").terminal("a");
    const Instance inst = c5.build();
    CHECK(oracle_solve(inst, 5).size == 0);
    CHECK(cycle_oracle_solve(inst, 5).size == 1);
  }

  TEST_CASE("drawn example minimum") {
    const Instance inst = sfvs::testing::dividing_example().build();
    const auto a = oracle_solve(inst, 20), b = cycle_oracle_solve(inst, 20);
    REQUIRE(a.size.has_value());
    CHECK(a.size == b.size);
    CHECK(verify_solution(inst, a.witness));
    CHECK(verify_solution(inst, b.witness, VerifyMode::cycle));
  }

  TEST_CASE("triangle and cycle minima agree on chordal graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Instance inst = gen_chordal(3 + static_cast<int>(seed % 10), 0.5, 0.4, 0.1, 0, seed);
      const auto a = oracle_solve(inst, 20), b = cycle_oracle_solve(inst, 20);
      CAPTURE(seed);
      REQUIRE(a.size.has_value());
      CHECK(a.size == b.size);
      CHECK(verify_solution(inst, a.witness, VerifyMode::cycle));
    }
  }
}
