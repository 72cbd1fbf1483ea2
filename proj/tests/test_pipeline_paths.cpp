#include <doctest.h>

#include <algorithm>
#include <set>

#include "antimagic/assembler.hpp"
#include "antimagic/report.hpp"
#include "antimagic/verifier.hpp"
#include "fixtures.hpp"

using namespace antimagic;
using namespace antimagic::testing;

// The random corpus only ever produces one-sided covers; these instances
// force cover-internal structure so the whole construction runs.

TEST_CASE("mixed cover: cover-internal edges, even subgraph, nontrivial gamma") {
  TwoBlockOptions opt;
  auto fx = two_block_graph(opt);
  LabelResult res = label_graph(fx.graph);
  CHECK(verify(fx.graph, res.labeling).antimagic);
  CHECK(res.plan.counts.m2 > 0);
  CHECK(res.plan.counts.eps1 > 0);  // the even subgraph actually grew
  CHECK(res.plan.counts.m20 > 0);
  CHECK_FALSE(res.partition.o1.empty());
  CHECK_FALSE(res.partition.j1.empty());
  StructuralReport rep = structural_report(fx.graph, res.labeling, res.plan, res.partition);
  CHECK(rep.x_zero_residue == 0);
  CHECK(rep.y_nonzero_residue <= 1);
}

TEST_CASE("solo gadgets land in the isolated class and get matched out") {
  TwoBlockOptions opt;
  opt.solo_gadgets = 2;
  auto fx = two_block_graph(opt);
  LabelResult res = label_graph(fx.graph);
  CHECK(verify(fx.graph, res.labeling).antimagic);
  std::set<VertexId> i2(res.plan.i2.begin(), res.plan.i2.end());
  for (VertexId v : fx.forced_i2) CHECK(i2.count(v) == 1);
  // Isolated from each other: the whole class pairs off through F3.
  CHECK(res.plan.i21 == res.plan.i2);
  CHECK(res.plan.counts.k3 == 2);
  CHECK(res.plan.counts.k2 == 0);
  CHECK_FALSE(res.partition.j3.empty());
}

TEST_CASE("starving the cover sets produces a two-edge star") {
  TwoBlockOptions opt;
  opt.f2_star_leaves = 2;
  auto fx = two_block_graph(opt);
  LabelOptions lo;
  lo.seed = kStressCoverageSeed;
  LabelResult res = label_graph(fx.graph, lo);
  CHECK(verify(fx.graph, res.labeling).antimagic);
  std::set<VertexId> i2(res.plan.i2.begin(), res.plan.i2.end());
  for (VertexId v : fx.forced_i2) CHECK(i2.count(v) == 1);
  CHECK(res.plan.counts.k2 == 2);
  CHECK(res.plan.counts.s1 == 0);
  CHECK(res.plan.counts.s2 == 1);
  CHECK(res.plan.i21.empty());
  CHECK(res.partition.j2.size() == 2);
  // Without the stress flag the star's hub keeps a live edge instead.
  LabelResult plain = label_graph(fx.graph);
  CHECK(verify(fx.graph, plain.labeling).antimagic);
  CHECK(plain.plan.counts.k2 == 0);
}

TEST_CASE("single-leaf star has odd size") {
  TwoBlockOptions opt;
  opt.f2_star_leaves = 1;
  auto fx = two_block_graph(opt);
  LabelOptions lo;
  lo.seed = kStressCoverageSeed;
  LabelResult res = label_graph(fx.graph, lo);
  CHECK(verify(fx.graph, res.labeling).antimagic);
  CHECK(res.plan.counts.k2 == 1);
  CHECK(res.plan.counts.s1 == 1);
  CHECK(res.plan.counts.s2 == 0);
}

TEST_CASE("both imbalance flavours of the special vertex appear") {
  // Sweep the tuning knob: odd m11 gives a single special edge, the
  // balanced-minus-two case gives the special link pair.
  bool saw_single = false, saw_pair = false;
  for (int tuning = 0; tuning < 12 && !(saw_single && saw_pair); ++tuning) {
    TwoBlockOptions opt;
    opt.f2_star_leaves = 2;
    opt.tuning = tuning;
    auto fx = two_block_graph(opt);
    LabelOptions lo;
    lo.seed = kStressCoverageSeed;
    LabelResult res = label_graph(fx.graph, lo);
    CHECK(verify(fx.graph, res.labeling).antimagic);
    if (res.plan.e40.size() == 1) {
      saw_single = true;
      CHECK(res.plan.counts.m11 % 2 == 1);
      CHECK(res.partition.j40.size() == 1);
    }
    if (res.plan.e40.size() == 2) {
      saw_pair = true;
      CHECK(res.plan.counts.m11 % 2 == 0);
      CHECK(res.partition.j40.size() == 2);
      CHECK(res.plan.y0.size() == 1);
      // Both special edges meet at the special vertex.
      auto [u1, v1] = fx.graph.edge(res.plan.e40[0]);
      auto [u2, v2] = fx.graph.edge(res.plan.e40[1]);
      VertexId yp = res.plan.y0[0];
      CHECK((u1 == yp || v1 == yp));
      CHECK((u2 == yp || v2 == yp));
    }
  }
  CHECK(saw_single);
  CHECK(saw_pair);
}

TEST_CASE("a starved hub is rescued by the alternating-path switch") {
  TwoBlockOptions opt;
  opt.starved_hub = true;
  auto fx = two_block_graph(opt);
  LabelOptions lo;
  lo.seed = kStressCoverageSeed;
  LabelResult res = label_graph(fx.graph, lo);
  CHECK(verify(fx.graph, res.labeling).antimagic);
  // The stress mode piles the hub's covering edges up (14 of 14 possible);
  // the switch must have moved at least one away again.
  int e1_at_hub = 0;
  for (EdgeId e : res.plan.e1) {
    auto [u, v] = fx.graph.edge(e);
    if (u == fx.hub || v == fx.hub) ++e1_at_hub;
  }
  CHECK(e1_at_hub == 13);
}

TEST_CASE("gadgets, star and hub all at once") {
  TwoBlockOptions opt;
  opt.solo_gadgets = 1;
  opt.f2_star_leaves = 2;
  opt.starved_hub = true;
  opt.tuning = 3;
  auto fx = two_block_graph(opt);
  for (std::uint64_t base : {std::uint64_t{0}, kStressCoverageSeed}) {
    LabelOptions lo;
    lo.seed = base;
    LabelResult res = label_graph(fx.graph, lo);
    CHECK(verify(fx.graph, res.labeling).antimagic);
    StructuralReport rep = structural_report(fx.graph, res.labeling, res.plan, res.partition);
    CHECK(rep.x_zero_residue == 0);
    CHECK(rep.y_nonzero_residue <= 1);
  }
}
