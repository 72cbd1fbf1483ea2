#include <doctest.h>

#include "antimagic/assembler.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/verifier.hpp"

using namespace antimagic;

// Instances found by seed sweeps where the final label rotation actually
// fires on a live graph; pinned so every reachable direction stays covered
// end to end.

namespace {

void expect_case(int n_a, int n_b, double extra, std::uint64_t gen_seed,
                 std::uint64_t label_seed, int want_case) {
  BipartiteGraph g = random_min_degree(n_a, n_b, 15, extra, gen_seed);
  LabelOptions opts;
  opts.seed = label_seed;
  LabelResult res = label_graph(g, opts);
  CHECK(res.step9_case == want_case);
  CHECK(res.attempts == 1);
  CHECK(verify(g, res.labeling).antimagic);
}

}  // namespace

TEST_CASE("live upward rotation") {
  expect_case(32, 34, 0.24, 41071, kStressCoverageSeed, 1);
}

TEST_CASE("live downward rotation") {
  expect_case(23, 33, 0.16, 40922, 0, -1);
}

TEST_CASE("live matched-low-target rotation") {
  expect_case(32, 34, 0.24, 41775, kStressCoverageSeed, -31);
}

TEST_CASE("live pre-matching collision swap") {
  // The special vertex and its matching partner tie on pre-matching sums;
  // the label swap must separate them before the matching is labeled.
  BipartiteGraph g = random_min_degree(16, 16, 15, 0.0, 140152);
  LabelResult res = label_graph(g);
  CHECK(res.partner_switched);
  CHECK(res.attempts == 1);
  CHECK(verify(g, res.labeling).antimagic);
}
