#include "antimagic/mod3.hpp"

#include <algorithm>
#include <array>

#include "antimagic/errors.hpp"
#include "antimagic/structure.hpp"
#include "antimagic/trail.hpp"

namespace antimagic {

namespace {

struct Hypothesis {
  bool all_y_even = true;
  bool component_with_odd_both_sides = false;
};

Hypothesis inspect(const BipartiteGraph& g, const EdgeSubset& s,
                   const std::vector<char>& x_side) {
  Hypothesis h;
  auto split = connected_components(g, s);
  for (const Component& c : split.components) {
    bool odd_x = false, odd_y = false, any_odd = false;
    for (VertexId v : c.vertices) {
      if (s.degree(v) % 2 == 0) continue;
      any_odd = true;
      (x_side[v] ? odd_x : odd_y) = true;
    }
    AM_REQUIRE(any_odd, "mod-3 labeling: Eulerian component");
    if (odd_y) h.all_y_even = false;
    if (odd_x && odd_y) h.component_with_odd_both_sides = true;
  }
  return h;
}

}  // namespace

ResiduePlan assign_residues(const BipartiteGraph& g, const EdgeSubset& s,
                            const std::vector<char>& x_side, long long ones, long long twos) {
  AM_REQUIRE(!s.empty(), "assign_residues: empty subset");
  AM_REQUIRE(ones >= 0 && twos >= 0 && ones + twos == s.size(),
             "assign_residues: class counts must cover the subset");
  AM_REQUIRE(std::llabs(ones - twos) <= 2, "assign_residues: class imbalance above two");
  Hypothesis hyp = inspect(g, s, x_side);
  AM_REQUIRE(hyp.all_y_even || hyp.component_with_odd_both_sides,
             "assign_residues: odd Y-side degrees without a two-sided odd component");

  // The rules are written for a surplus of class 1; run with classes
  // relabeled when class 2 is the larger one.
  const int maj = ones >= twos ? 1 : 2;
  const int min_cls = 3 - maj;
  const long long iota = std::llabs(ones - twos);

  TrailDecomposition d = good_open_trail_decomposition(g, s);
  d = splice_for_xy(g, std::move(d), x_side);
  d = order_and_orient(std::move(d), x_side);

  int r1 = 0, r2 = 0;
  for (const Trail& t : d.trails) {
    TrailKind k = classify(t, x_side);
    if (k == TrailKind::y_trail) ++r1;
    if (k == TrailKind::xy_trail) ++r2;
  }
  AM_CHECK(r1 == 0 || r2 > 0, "odd Y endpoints must come with an XY-trail");

  // Completion fallback: with no XY-trail and a surplus of two, the last
  // trail starts with two majority labels instead of following the rules.
  const bool fallback = (r2 == 0 && iota == 2);
  if (fallback) AM_CHECK(r1 == 0, "fallback is an all-X-trail situation");

  ResiduePlan plan;
  plan.residue_of_edge.assign(g.edge_count(), 0);
  plan.ones_at.assign(g.vertex_count(), 0);
  plan.twos_at.assign(g.vertex_count(), 0);

  long long remaining[3] = {0, ones, twos};
  long long used[3] = {0, 0, 0};
  std::vector<int> labeled_at(g.vertex_count(), 0);  // h(v)

  auto assign = [&](EdgeId e, int residue) {
    AM_CHECK(remaining[residue] > 0, "mod-3 labeling suspended: class exhausted");
    --remaining[residue];
    ++used[residue];
    plan.residue_of_edge[e] = residue;
    auto [a, b] = g.edge(e);
    ++labeled_at[a];
    ++labeled_at[b];
    (residue == 1 ? plan.ones_at : plan.twos_at)[a] += 1;
    (residue == 1 ? plan.ones_at : plan.twos_at)[b] += 1;
  };

  bool seen_first_y_trail = false;
  for (int ti = 0; ti < d.trail_count(); ++ti) {
    const Trail& t = d.trails[ti];
    TrailKind kind = classify(t, x_side);
    const bool special = fallback && ti == d.trail_count() - 1;
    int prev = 0;
    for (int j = 0; j < t.length(); ++j) {
      VertexId from = t.vertices[j];
      VertexId to = t.vertices[j + 1];
      int residue;
      if (special && j <= 1) {
        residue = maj;
      } else if (j == 0) {
        // Rule for the first edge of each trail.
        switch (kind) {
          case TrailKind::y_trail:
            if (!seen_first_y_trail) {
              residue = maj;
              seen_first_y_trail = true;
            } else {
              residue = used[maj] <= used[min_cls] ? maj : min_cls;
            }
            break;
          case TrailKind::xy_trail:
            residue = used[maj] <= used[min_cls] + iota ? maj : min_cls;
            break;
          case TrailKind::x_trail:
          default:
            residue = maj;
            break;
        }
      } else if (!x_side[from]) {
        // Y-to-X edge follows the complement of the preceding X-to-Y edge.
        residue = 3 - prev;
      } else {
        // X-to-Y edge: complement of the incoming label, except at the last
        // slot of an even-degree vertex, which repeats it.
        int deg = s.degree(from);
        int h = labeled_at[from];
        if (deg % 2 == 0) {
          AM_CHECK(h % 2 == 1, "even-degree vertex reached with even labeled count");
          residue = (h == deg - 1) ? prev : 3 - prev;
        } else {
          residue = 3 - prev;
        }
      }
      AM_CHECK(to == g.other_end(t.edges[j], from), "trail orientation mismatch");
      assign(t.edges[j], residue);
      prev = residue;
    }
  }
  AM_CHECK(remaining[1] == 0 && remaining[2] == 0, "mod-3 labeling left labels unused");
  plan.ones_total = static_cast<int>(ones);
  plan.twos_total = static_cast<int>(twos);

  // Guarantee (i).
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!x_side[v] || s.degree(v) == 0) continue;
    AM_CHECK(plan.partial_sum_residue(v) != 0, "X-side vertex got a 0-residue partial sum");
  }
  // Guarantee (ii).
  int unbalanced = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (x_side[v] || s.degree(v) == 0) continue;
    int diff = std::abs(plan.ones_at[v] - plan.twos_at[v]);
    if (hyp.all_y_even) {
      if (diff != 0) {
        ++unbalanced;
        AM_CHECK(diff == 2, "even-Y case allows only an off-by-two vertex");
      }
    } else {
      AM_CHECK(diff <= 1, "odd-Y case allows class difference at most one");
    }
  }
  AM_CHECK(unbalanced <= 1, "more than one unbalanced Y-side vertex");
  return plan;
}

ResiduePool ResiduePool::from_labels(std::span<const long long> labels) {
  ResiduePool p;
  for (long long v : labels) {
    AM_REQUIRE(v > 0 && v % 3 != 0, "pool labels must be nonzero mod 3");
    (v % 3 == 1 ? p.ones : p.twos).push_back(v);
  }
  std::sort(p.ones.begin(), p.ones.end());
  std::sort(p.twos.begin(), p.twos.end());
  return p;
}

long long ResiduePool::take_greatest(int residue) {
  auto& v = residue == 1 ? ones : twos;
  AM_REQUIRE(!v.empty(), "residue pool exhausted");
  long long out = v.back();
  v.pop_back();
  return out;
}

long long ResiduePool::take_least(int residue) {
  auto& v = residue == 1 ? ones : twos;
  AM_REQUIRE(!v.empty(), "residue pool exhausted");
  long long out = v.front();
  v.erase(v.begin());
  return out;
}

std::vector<long long> materialize(const BipartiteGraph& g, const EdgeSubset& s,
                                   const ResiduePlan& plan, ResiduePool pool,
                                   const EdgeSubset& reserved) {
  long long need_ones = 0, need_twos = 0;
  for (EdgeId e : s.edge_ids()) (plan.residue_of_edge[e] == 1 ? need_ones : need_twos) += 1;
  AM_REQUIRE(need_ones == static_cast<long long>(pool.ones.size()) &&
                 need_twos == static_cast<long long>(pool.twos.size()),
             "materialize: pool does not match the plan's class sizes");

  std::vector<long long> labels(g.edge_count(), 0);
  for (EdgeId e : reserved.edge_ids()) {
    AM_REQUIRE(s.contains(e), "materialize: reserved edge outside the subset");
    labels[e] = pool.take_greatest(plan.residue_of_edge[e]);
  }
  for (EdgeId e : s.edge_ids()) {
    if (labels[e] != 0) continue;
    labels[e] = pool.take_least(plan.residue_of_edge[e]);
  }
  AM_CHECK(pool.exhausted(), "materialize: labels left over");
  return labels;
}

std::optional<BothResidueSwitch> plan_both_residue_switch(const BipartiteGraph& g,
                                                          const EdgeSubset& s,
                                                          const std::vector<char>& x_side,
                                                          const ResiduePlan& plan,
                                                          const std::vector<char>& pendant_w) {
  int present[3] = {0, 0, 0};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.degree(v) == 0) continue;
    if (x_side[v] || pendant_w[v]) present[plan.partial_sum_residue(v)] += 1;
  }
  AM_CHECK(present[0] == 0, "a tracked vertex has a 0-residue partial sum");
  if (present[1] > 0 && present[2] > 0) return std::nullopt;

  const int mu = present[1] > 0 ? 1 : 2;  // the residue every sum currently has
  const int rho = 3 - mu;

  // Degree within G[X u Y2 u Y3]: s-edges avoiding the pendant set.
  auto core_degree = [&](VertexId v) {
    int d = 0;
    for (EdgeId e : s.incident(v))
      if (!pendant_w[g.other_end(e, v)]) ++d;
    return d;
  };

  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (!x_side[u] || s.degree(u) == 0) continue;
    if (core_degree(u) < 4) continue;
    std::vector<EdgeId> rho_edges;
    for (EdgeId e : s.incident(u)) {
      if (plan.residue_of_edge[e] != rho) continue;
      VertexId y = g.other_end(e, u);
      AM_CHECK(!pendant_w[y], "minority-class edge into the pendant set");
      rho_edges.push_back(e);
    }
    if (rho_edges.size() < 2) continue;

    // Partner edges at the two Y-side endpoints, carrying the majority
    // residue; the two partners must be distinct X-side vertices.
    EdgeId e1 = rho_edges[0], e2 = rho_edges[1];
    VertexId y1 = g.other_end(e1, u), y2 = g.other_end(e2, u);
    auto partners = [&](VertexId y) {
      std::vector<EdgeId> out;
      for (EdgeId e : s.incident(y))
        if (plan.residue_of_edge[e] == mu) out.push_back(e);
      return out;
    };
    for (EdgeId f1 : partners(y1)) {
      for (EdgeId f2 : partners(y2)) {
        if (g.other_end(f1, y1) == g.other_end(f2, y2)) continue;
        BothResidueSwitch sw;
        sw.swaps[0] = {e1, f1};
        sw.swaps[1] = {e2, f2};
        return sw;
      }
    }
  }
  throw internal_error("no switch vertex found; hypotheses of the switch were violated");
}

void apply_switch_to_plan(const BipartiteGraph& g, ResiduePlan& plan,
                          const BothResidueSwitch& sw) {
  for (const auto& [a, b] : sw.swaps) {
    int ra = plan.residue_of_edge[a];
    int rb = plan.residue_of_edge[b];
    AM_CHECK(ra != 0 && rb != 0 && ra != rb, "switch must swap opposite residues");
    plan.residue_of_edge[a] = rb;
    plan.residue_of_edge[b] = ra;
    for (VertexId v : {g.edge(a).first, g.edge(a).second}) {
      (ra == 1 ? plan.ones_at : plan.twos_at)[v] -= 1;
      (rb == 1 ? plan.ones_at : plan.twos_at)[v] += 1;
    }
    for (VertexId v : {g.edge(b).first, g.edge(b).second}) {
      (rb == 1 ? plan.ones_at : plan.twos_at)[v] -= 1;
      (ra == 1 ? plan.ones_at : plan.twos_at)[v] += 1;
    }
  }
}

std::vector<long long> ensure_both_residues(const BipartiteGraph& g, const EdgeSubset& s,
                                            const std::vector<char>& x_side,
                                            std::vector<long long> labels,
                                            const std::vector<char>& pendant_w) {
  ResiduePlan plan;
  plan.residue_of_edge.assign(g.edge_count(), 0);
  plan.ones_at.assign(g.vertex_count(), 0);
  plan.twos_at.assign(g.vertex_count(), 0);
  for (EdgeId e : s.edge_ids()) {
    AM_REQUIRE(labels[e] > 0 && labels[e] % 3 != 0, "labels on s must be {1,2}-labels");
    int r = static_cast<int>(labels[e] % 3);
    plan.residue_of_edge[e] = r;
    auto [a, b] = g.edge(e);
    (r == 1 ? plan.ones_at : plan.twos_at)[a] += 1;
    (r == 1 ? plan.ones_at : plan.twos_at)[b] += 1;
  }
  auto sw = plan_both_residue_switch(g, s, x_side, plan, pendant_w);
  if (sw) {
    for (const auto& [a, b] : sw->swaps) std::swap(labels[a], labels[b]);
  }
  return labels;
}

}  // namespace antimagic
