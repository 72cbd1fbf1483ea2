#include <doctest.h>

#include <algorithm>

#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/mod3.hpp"
#include "antimagic/structure.hpp"

using namespace antimagic;

namespace {

std::vector<char> a_side_is_x(const BipartiteGraph& g) {
  std::vector<char> x(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.side_a_count(); ++v) x[v] = 1;
  return x;
}

struct Case {
  BipartiteGraph g;
  std::vector<EdgeId> member_edges;
  std::vector<char> x;
  EdgeSubset subset() const { return EdgeSubset::of(g, member_edges); }
};

// Random instance satisfying the labeling hypotheses, or nothing.
std::optional<Case> hypothesis_instance(std::uint64_t seed) {
  BipartiteGraph g = random_min_degree(5, 6, 2, 0.35, seed);
  EdgeSubset s(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if ((seed + 7 * e) % 4 != 0) s.insert(e);
  for (const Component& c : connected_components(g, s).components) {
    EdgeSubset cs = EdgeSubset::of(g, c.edges);
    bool eulerian = true;
    for (VertexId v : c.vertices) eulerian &= cs.degree(v) % 2 == 0;
    if (eulerian)
      for (EdgeId e : c.edges) s.erase(e);
  }
  if (s.empty()) return std::nullopt;
  auto x = a_side_is_x(g);
  bool all_y_even = true, both_sides = false;
  for (const Component& c : connected_components(g, s).components) {
    bool ox = false, oy = false;
    for (VertexId v : c.vertices) {
      if (s.degree(v) % 2 == 0) continue;
      (x[v] ? ox : oy) = true;
    }
    if (oy) all_y_even = false;
    if (ox && oy) both_sides = true;
  }
  if (!all_y_even && !both_sides) return std::nullopt;
  std::vector<EdgeId> members = s.edge_ids();
  return Case{std::move(g), std::move(members), std::move(x)};
}

void check_conclusions(const Case& cs, const ResiduePlan& plan) {
  EdgeSubset s = cs.subset();
  bool all_y_even = true;
  for (VertexId v = 0; v < cs.g.vertex_count(); ++v)
    if (!cs.x[v] && s.degree(v) % 2 == 1) all_y_even = false;
  for (VertexId v = 0; v < cs.g.vertex_count(); ++v) {
    if (s.degree(v) == 0) continue;
    if (cs.x[v]) {
      CHECK(plan.partial_sum_residue(v) != 0);
    }
  }
  int unbalanced = 0;
  for (VertexId v = 0; v < cs.g.vertex_count(); ++v) {
    if (cs.x[v] || s.degree(v) == 0) continue;
    int d = std::abs(plan.ones_at[v] - plan.twos_at[v]);
    if (all_y_even) {
      if (d != 0) {
        ++unbalanced;
        CHECK(d == 2);
      }
    } else {
      CHECK(d <= 1);
    }
  }
  CHECK(unbalanced <= 1);
}

}  // namespace

TEST_CASE("path of three edges: the hand-simulated residues") {
  // x1 y1 x2 y2 as A = {x1, x2} = {0, 1}, B = {y1, y2} = {2, 3}.
  BipartiteGraph g(2, 2, {{0, 2}, {2, 1}, {1, 3}});
  auto x = a_side_is_x(g);
  auto plan = assign_residues(g, EdgeSubset::all_of(g), x, 2, 1);
  // Along the trail oriented y2 x2 y1 x1 the residues are 1, 1, 2.
  CHECK(plan.residue_of_edge[2] == 1);  // x2 y2
  CHECK(plan.residue_of_edge[1] == 1);  // x2 y1
  CHECK(plan.residue_of_edge[0] == 2);  // x1 y1
  CHECK(plan.partial_sum_residue(1) == 2);
  CHECK(plan.partial_sum_residue(0) == 2);
  CHECK(plan.ones_at[2] == 1);
  CHECK(plan.twos_at[2] == 1);
  CHECK(plan.ones_at[3] == 1);
  CHECK(plan.twos_at[3] == 0);
}

TEST_CASE("single edge and Eulerian rejection") {
  BipartiteGraph k2(1, 1, {{0, 1}});
  auto x = a_side_is_x(k2);
  auto plan = assign_residues(k2, EdgeSubset::all_of(k2), x, 1, 0);
  CHECK(plan.residue_of_edge[0] == 1);
  CHECK(plan.partial_sum_residue(0) != 0);

  BipartiteGraph c4(2, 2, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK_THROWS_AS(assign_residues(c4, EdgeSubset::all_of(c4), a_side_is_x(c4), 2, 2),
                  contract_error);
}

TEST_CASE("conclusions hold on random hypothesis instances") {
  int done = 0;
  for (std::uint64_t seed = 1; done < 100; ++seed) {
    auto cs = hypothesis_instance(seed);
    if (!cs) continue;
    EdgeSubset s = cs->subset();
    long long m = s.size();
    // All class splits the parity allows, both directions.
    for (long long diff : {-2LL, -1LL, 0LL, 1LL, 2LL}) {
      if ((m - diff) % 2 != 0) continue;
      long long twos = (m - diff) / 2, ones = m - twos;
      if (ones < 0 || twos < 0) continue;
      auto plan = assign_residues(cs->g, s, cs->x, ones, twos);
      CHECK(plan.ones_total == ones);
      CHECK(plan.twos_total == twos);
      check_conclusions(*cs, plan);
    }
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("surplus-of-two fallback doubles up the first trail edges") {
  // A single X-to-X trail of two edges with a surplus of two 1-labels: the
  // completion fallback labels both edges with the majority class, leaving
  // the middle vertex doubly unbalanced.
  BipartiteGraph link(2, 1, {{0, 2}, {1, 2}});
  auto x = a_side_is_x(link);
  auto plan = assign_residues(link, EdgeSubset::all_of(link), x, 2, 0);
  CHECK(plan.residue_of_edge[0] == 1);
  CHECK(plan.residue_of_edge[1] == 1);
  CHECK(plan.ones_at[2] - plan.twos_at[2] == 2);
  CHECK(plan.partial_sum_residue(0) != 0);
  CHECK(plan.partial_sum_residue(1) != 0);

  // Larger all-even-Y instance, surplus two in either class: both Y-side
  // vertices have degree four, three X vertices are even, two odd.
  BipartiteGraph g(5, 2,
                   {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {0, 6}, {1, 6}, {2, 6}, {4, 6}});
  auto x2 = a_side_is_x(g);
  for (long long ones : {5LL, 3LL}) {
    auto p = assign_residues(g, EdgeSubset::all_of(g), x2, ones, 8 - ones);
    int unbalanced = 0;
    for (VertexId v = 5; v <= 6; ++v) {
      int d = std::abs(p.ones_at[v] - p.twos_at[v]);
      if (d != 0) {
        ++unbalanced;
        CHECK(d == 2);
      }
    }
    CHECK(unbalanced <= 1);
    for (VertexId v = 0; v <= 4; ++v) CHECK(p.partial_sum_residue(v) != 0);
  }
}

TEST_CASE("materialize: reserved edges take the greatest class labels") {
  BipartiteGraph g(2, 2, {{0, 2}, {2, 1}, {1, 3}});
  auto x = a_side_is_x(g);
  auto plan = assign_residues(g, EdgeSubset::all_of(g), x, 2, 1);
  // plan residues: e0 -> 2, e1 -> 1, e2 -> 1.
  ResiduePool pool = ResiduePool::from_labels(std::vector<long long>{1, 4, 2});
  EdgeSubset reserved(g);
  reserved.insert(1);
  auto labels = materialize(g, EdgeSubset::all_of(g), plan, pool, reserved);
  CHECK(labels[1] == 4);  // greatest 1-label
  CHECK(labels[2] == 1);
  CHECK(labels[0] == 2);

  ResiduePool bad = ResiduePool::from_labels(std::vector<long long>{1, 2, 5});
  CHECK_THROWS_AS(materialize(g, EdgeSubset::all_of(g), plan, bad, EdgeSubset(g)),
                  contract_error);
}

TEST_CASE("both-residue switch activates only when needed") {
  // K_{4,4} minus a perfect matching: all degrees 3, odd on both sides.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) edges.push_back({i, 4 + j});
  BipartiteGraph g(4, 4, edges);
  auto x = a_side_is_x(g);
  EdgeSubset s = EdgeSubset::all_of(g);
  std::vector<char> w(g.vertex_count(), 0);  // no pendants
  auto plan = assign_residues(g, s, x, 6, 6);

  int q1 = 0, q2 = 0;
  for (VertexId v = 0; v < 4; ++v) (plan.partial_sum_residue(v) == 1 ? q1 : q2) += 1;
  auto sw = plan_both_residue_switch(g, s, x, plan, w);
  if (q1 > 0 && q2 > 0) {
    CHECK(!sw.has_value());
  } else {
    REQUIRE(sw.has_value());
    apply_switch_to_plan(g, plan, *sw);
    int r1 = 0, r2 = 0;
    for (VertexId v = 0; v < 4; ++v) (plan.partial_sum_residue(v) == 1 ? r1 : r2) += 1;
    CHECK(r1 > 0);
    CHECK(r2 > 0);
    // The proof's count: exactly three vertices flip.
    CHECK((r1 == 3 || r2 == 3));
  }
}

TEST_CASE("forced single-residue start flips three sums") {
  // Build a labeling by hand where every tracked sum has residue 1, then
  // let the switch create residue-2 sums; |X u W| = 4 and q2' = 3, q1' = 1.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) edges.push_back({i, 4 + j});
  BipartiteGraph g(4, 4, edges);  // K_{4,4}
  auto x = a_side_is_x(g);
  EdgeSubset s = EdgeSubset::all_of(g);
  std::vector<char> w(g.vertex_count(), 0);

  // One 1-label per X vertex along the identity matching, 2-labels
  // elsewhere: every x holds (1,2,2,2) and so a 1-residue sum, and every y
  // keeps one 1-labeled edge for the exchange to grab.
  ResiduePlan plan;
  plan.residue_of_edge.assign(g.edge_count(), 0);
  plan.ones_at.assign(g.vertex_count(), 0);
  plan.twos_at.assign(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int residue = (v - 4 == u) ? 1 : 2;
    plan.residue_of_edge[e] = residue;
    (residue == 1 ? plan.ones_at : plan.twos_at)[u] += 1;
    (residue == 1 ? plan.ones_at : plan.twos_at)[v] += 1;
  }
  for (VertexId v = 0; v < 4; ++v) REQUIRE(plan.partial_sum_residue(v) == 1);

  auto sw = plan_both_residue_switch(g, s, x, plan, w);
  REQUIRE(sw.has_value());
  apply_switch_to_plan(g, plan, *sw);
  int q1 = 0, q2 = 0;
  for (VertexId v = 0; v < 4; ++v) (plan.partial_sum_residue(v) == 1 ? q1 : q2) += 1;
  CHECK(q2 == 3);
  CHECK(q1 == 1);
}
