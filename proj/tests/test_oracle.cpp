#include <doctest.h>

#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/oracle.hpp"

using namespace antimagic;

TEST_CASE("the classics") {
  CHECK_FALSE(brute_force_is_antimagic(complete_bipartite(1, 1)));  // K2
  CHECK(brute_force_is_antimagic(BipartiteGraph(1, 2, {{0, 1}, {0, 2}})));  // P3
  BipartiteGraph c4(2, 2, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(brute_force_is_antimagic(c4));
  CHECK(brute_force_is_antimagic(complete_bipartite(1, 3)));  // K_{1,3}
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(brute_force_is_antimagic(complete_bipartite(2, 5)), contract_error);
  CHECK(brute_force_is_antimagic(complete_bipartite(3, 3)));  // m = 9, at the cap
}
