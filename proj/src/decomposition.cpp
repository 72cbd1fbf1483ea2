#include "antimagic/decomposition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include "antimagic/errors.hpp"
#include "antimagic/structure.hpp"

namespace antimagic {

namespace {

// Splitmix-style hash for seed-dependent tie-breaking. Seed 0 keeps the
// canonical (lowest-id) order.
std::uint64_t jitter(std::uint64_t seed, std::uint64_t id) {
  if (seed == 0) return 0;
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + id + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

KonigPartition konig_partition(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<VertexId> mate(n, -1);
  std::vector<EdgeId> mate_edge(n, -1);
  std::vector<char> visited(n, 0);

  // Kuhn's augmenting-path matching from side A, lowest ids first.
  std::function<bool(VertexId)> try_augment = [&](VertexId a) -> bool {
    for (EdgeId e : g.incident(a)) {
      VertexId b = g.other_end(e, a);
      if (visited[b]) continue;
      visited[b] = 1;
      if (mate[b] == -1 || try_augment(mate[b])) {
        mate[a] = b;
        mate[b] = a;
        mate_edge[a] = e;
        mate_edge[b] = e;
        return true;
      }
    }
    return false;
  };
  for (VertexId a = 0; a < g.side_a_count(); ++a) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(a);
  }

  // Alternating reachability from unmatched side-A vertices; the cover is
  // (A minus reached) plus (B intersect reached).
  std::vector<char> reached(n, 0);
  std::vector<VertexId> queue;
  for (VertexId a = 0; a < g.side_a_count(); ++a)
    if (mate[a] == -1) {
      reached[a] = 1;
      queue.push_back(a);
    }
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (g.on_side_a(v)) {
      for (EdgeId e : g.incident(v)) {
        VertexId b = g.other_end(e, v);
        if (e != mate_edge[v] && !reached[b]) {
          reached[b] = 1;
          queue.push_back(b);
        }
      }
    } else if (mate[v] != -1 && !reached[mate[v]]) {
      reached[mate[v]] = 1;
      queue.push_back(mate[v]);
    }
  }

  KonigPartition out;
  out.x_side.assign(n, 0);
  for (VertexId a = 0; a < g.side_a_count(); ++a) out.x_side[a] = !reached[a];
  for (VertexId b = g.side_a_count(); b < n; ++b) out.x_side[b] = reached[b];

  out.matched_edge.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (!out.x_side[v]) continue;
    AM_CHECK(mate[v] != -1, "cover vertex left unmatched");
    AM_CHECK(!out.x_side[mate[v]], "matching edge with both ends in the cover");
    out.matched_edge[v] = mate_edge[v];
    out.matched_edge[mate[v]] = mate_edge[v];
    out.matching.push_back(mate_edge[v]);
  }
  std::sort(out.matching.begin(), out.matching.end());

  // Y must be independent.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    AM_CHECK(out.x_side[u] || out.x_side[v], "independent side carries an edge");
  }
  return out;
}

LabelCensus census(long long lo, long long hi) {
  auto upto = [](long long n, int r) -> long long {
    if (n <= 0) return 0;
    switch (r) {
      case 0: return n / 3;
      case 1: return (n + 2) / 3;
      default: return (n + 1) / 3;
    }
  };
  LabelCensus c;
  c.zeros = upto(hi, 0) - upto(lo, 0);
  c.ones = upto(hi, 1) - upto(lo, 1);
  c.twos = upto(hi, 2) - upto(lo, 2);
  return c;
}

namespace {

struct Workspace {
  const BipartiteGraph& g;
  std::uint64_t seed;
  DecompositionPlan plan;

  Workspace(const BipartiteGraph& graph, std::uint64_t s) : g(graph), seed(s) {}

  bool in_x(VertexId v) const { return plan.x_side[v] != 0; }

  // --- 1.1 / 1.2: cover split, E1, E2, G0 ---------------------------------

  EdgeSubset g0{g};  // G[X,Y] minus (M u E1 u E2); rebuilt as E1/E2 shift

  void pick_cover_sets() {
    auto kp = konig_partition(g);
    plan.x_side = kp.x_side;
    plan.matched_edge = kp.matched_edge;
    plan.m_edges = kp.matching;

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (in_x(v)) continue;
      if (plan.matched_edge[v] == -1) plan.z.push_back(v);
      (g.degree(v) % 2 == 1 ? plan.y_odd : plan.y_even).push_back(v);
    }

    // I1: isolated in G[X].
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in_x(v)) continue;
      bool iso = true;
      for (EdgeId e : g.incident(v)) iso &= !in_x(g.other_end(e, v));
      if (iso) plan.i1.push_back(v);
    }

    // Greedy E1/E2: cover each target once, preferring edges whose X end
    // keeps the largest residual degree in the evolving G0.
    std::vector<char> taken(g.edge_count(), 0);
    std::vector<int> residual(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in_x(v)) continue;
      for (EdgeId e : g.incident(v))
        if (!in_x(g.other_end(e, v))) ++residual[v];
      if (plan.matched_edge[v] != -1) --residual[v];
    }
    const bool starve = (seed & kStressCoverageSeed) != 0;
    auto pick_for = [&](VertexId y, std::vector<EdgeId>& dest) {
      EdgeId best = -1;
      for (EdgeId e : g.incident(y)) {
        if (taken[e] || e == plan.matched_edge[y]) continue;
        VertexId x = g.other_end(e, y);
        if (best == -1) {
          best = e;
          continue;
        }
        VertexId bx = g.other_end(best, y);
        long long kx = starve ? residual[x] : -residual[x];
        long long kb = starve ? residual[bx] : -residual[bx];
        auto key = std::make_tuple(kx, jitter(seed, e), e);
        auto bkey = std::make_tuple(kb, jitter(seed, best), best);
        if (key < bkey) best = e;
      }
      AM_CHECK(best != -1, "no free edge for a coverage target");
      taken[best] = 1;
      --residual[g.other_end(best, y)];
      dest.push_back(best);
    };
    for (VertexId y : plan.z) pick_for(y, plan.e1);
    for (VertexId y : plan.y_even) pick_for(y, plan.e2);
    std::sort(plan.e1.begin(), plan.e1.end());
    std::sort(plan.e2.begin(), plan.e2.end());

    rebuild_g0();
    fix_isolated_i1();
  }

  void rebuild_g0() {
    g0 = EdgeSubset(g);
    std::vector<char> skip(g.edge_count(), 0);
    for (EdgeId e : plan.m_edges) skip[e] = 1;
    for (EdgeId e : plan.e1) skip[e] = 1;
    for (EdgeId e : plan.e2) skip[e] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (in_x(u) == in_x(v)) continue;  // not a G[X,Y] edge
      if (!skip[e]) g0.insert(e);
    }
  }

  // Prefix switching along alternating paths until every I1 vertex has a
  // positive degree in G0. Each switch strictly shrinks the isolated set.
  void fix_isolated_i1() {
    std::vector<char> in_i1(g.vertex_count(), 0);
    for (VertexId v : plan.i1) in_i1[v] = 1;
    std::vector<char> in_e1(g.edge_count(), 0), in_e2(g.edge_count(), 0);
    for (EdgeId e : plan.e1) in_e1[e] = 1;
    for (EdgeId e : plan.e2) in_e2[e] = 1;

    auto isolated_i1 = [&]() {
      std::vector<VertexId> out;
      for (VertexId v : plan.i1)
        if (g0.degree(v) == 0) out.push_back(v);
      return out;
    };

    int guard = g.vertex_count() + 1;
    for (auto iso = isolated_i1(); !iso.empty(); iso = isolated_i1()) {
      AM_CHECK(--guard > 0, "isolated-vertex switching failed to make progress");
      const size_t before = iso.size();
      VertexId x1 = iso.front();
      // Alternating BFS: X -> Y along E1 u E2, Y -> X along G0.
      std::vector<EdgeId> via(g.vertex_count(), -1);
      std::vector<VertexId> par(g.vertex_count(), -1);
      std::vector<char> seen(g.vertex_count(), 0);
      std::vector<VertexId> queue = {x1};
      seen[x1] = 1;
      VertexId goal = -1;
      for (size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
        VertexId v = queue[qi];
        if (in_x(v)) {
          for (EdgeId e : g.incident(v)) {
            if (!in_e1[e] && !in_e2[e]) continue;
            VertexId y = g.other_end(e, v);
            if (seen[y]) continue;
            seen[y] = 1;
            via[y] = e;
            par[y] = v;
            queue.push_back(y);
          }
        } else {
          for (EdgeId e : g0.incident(v)) {
            VertexId x = g.other_end(e, v);
            if (seen[x]) continue;
            seen[x] = 1;
            via[x] = e;
            par[x] = v;
            queue.push_back(x);
            if (g0.degree(x) >= 2 || !in_i1[x]) {
              goal = x;
              break;
            }
          }
        }
      }
      if (goal == -1)
        throw diagnostic_error(
            "could not free an isolated vertex by switching; "
            "input violates the construction's degree assumptions");

      // Walk back, moving covering edges one step along the path.
      VertexId v = goal;
      while (v != x1) {
        VertexId y = par[v];
        EdgeId g0_edge = via[v];
        VertexId x_prev = par[y];
        EdgeId cover_edge = via[y];
        bool was_e1 = in_e1[cover_edge];
        (was_e1 ? in_e1 : in_e2)[cover_edge] = 0;
        (was_e1 ? in_e1 : in_e2)[g0_edge] = 1;
        g0.insert(cover_edge);
        g0.erase(g0_edge);
        v = x_prev;
      }
      plan.e1.clear();
      plan.e2.clear();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_e1[e]) plan.e1.push_back(e);
        if (in_e2[e]) plan.e2.push_back(e);
      }
      AM_CHECK(isolated_i1().size() < before, "switching must shrink the isolated set");
    }
  }

  // --- 1.3: I2, I2,1 and the three star forests ---------------------------

  void build_forests() {
    std::vector<char> in_i2(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in_x(v)) continue;
      if (g0.degree(v) == 0) {
        plan.i2.push_back(v);
        in_i2[v] = 1;
      }
    }
    // I2,1: isolated within G[I2].
    std::vector<char> in_i21(g.vertex_count(), 0);
    for (VertexId v : plan.i2) {
      bool iso = true;
      for (EdgeId e : g.incident(v)) iso &= !in_i2[g.other_end(e, v)];
      if (iso) {
        plan.i21.push_back(v);
        in_i21[v] = 1;
      }
    }

    // F1: one G1 edge per vertex of X minus I2 (replaced after the final E4
    // is known; the count k1 is what matters here).
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in_x(v) || in_i2[v]) continue;
      EdgeId best = -1;
      for (EdgeId e : g0.incident(v)) {
        if (best == -1 ||
            std::make_pair(jitter(seed, e), e) < std::make_pair(jitter(seed, best), best))
          best = e;
      }
      AM_CHECK(best != -1, "vertex outside I2 must have a G1 edge");
      plan.f1.push_back(best);
    }
    std::sort(plan.f1.begin(), plan.f1.end());

    // F2: spanning forest of G[I2 minus I2,1], pruned until every edge is
    // incident to a leaf; components end up stars.
    {
      std::vector<char> eligible(g.vertex_count(), 0);
      for (VertexId v : plan.i2)
        if (!in_i21[v]) eligible[v] = 1;
      // BFS spanning forest.
      std::vector<char> seen(g.vertex_count(), 0);
      std::vector<EdgeId> forest;
      for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (!eligible[root] || seen[root]) continue;
        std::vector<VertexId> queue = {root};
        seen[root] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
          VertexId v = queue[qi];
          for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (!eligible[w] || seen[w]) continue;
            seen[w] = 1;
            forest.push_back(e);
            queue.push_back(w);
          }
        }
      }
      std::sort(forest.begin(), forest.end());
      std::vector<int> deg(g.vertex_count(), 0);
      std::vector<char> alive(g.edge_count(), 0);
      for (EdgeId e : forest) {
        alive[e] = 1;
        ++deg[g.edge(e).first];
        ++deg[g.edge(e).second];
      }
      bool changed = true;
      while (changed) {
        changed = false;
        for (EdgeId e : forest) {
          if (!alive[e]) continue;
          auto [u, v] = g.edge(e);
          if (deg[u] >= 2 && deg[v] >= 2) {
            alive[e] = 0;
            --deg[u];
            --deg[v];
            changed = true;
          }
        }
      }
      for (EdgeId e : forest)
        if (alive[e]) plan.f2.push_back(e);
    }

    // F3: one edge from each I2,1 vertex to X minus I2.
    for (VertexId v : plan.i21) {
      EdgeId best = -1;
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (!in_x(w) || in_i2[w]) continue;
        if (best == -1 ||
            std::make_pair(jitter(seed, e), e) < std::make_pair(jitter(seed, best), best))
          best = e;
      }
      AM_CHECK(best != -1, "I2,1 vertex lacks a neighbor outside I2");
      plan.f3.push_back(best);
    }
    std::sort(plan.f3.begin(), plan.f3.end());
  }

  // --- 1.4: the even subgraph G3 ------------------------------------------

  // Smallest edge set forming a cycle in `sub` of length <= cap; empty when
  // none exists.
  std::vector<EdgeId> shortest_cycle(const EdgeSubset& sub, long long cap) {
    if (cap < 4) return {};
    std::vector<EdgeId> best;
    long long best_len = cap + 1;
    std::vector<int> dist(g.vertex_count());
    std::vector<EdgeId> via(g.vertex_count());
    std::vector<VertexId> par(g.vertex_count());
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      if (sub.degree(root) < 2) continue;
      std::fill(dist.begin(), dist.end(), -1);
      dist[root] = 0;
      via[root] = -1;
      par[root] = -1;
      std::vector<VertexId> queue = {root};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId v = queue[qi];
        if (2LL * (dist[v] + 1) >= best_len + 1) break;
        for (EdgeId e : sub.incident(v)) {
          VertexId w = g.other_end(e, v);
          if (e == via[v]) continue;
          if (dist[w] == -1) {
            dist[w] = dist[v] + 1;
            via[w] = e;
            par[w] = v;
            queue.push_back(w);
            continue;
          }
          // Closing edge: trim the two root paths at their first common
          // vertex to get a simple cycle.
          std::vector<VertexId> pa, pb;
          for (VertexId t = v; t != -1; t = par[t]) pa.push_back(t);
          for (VertexId t = w; t != -1; t = par[t]) pb.push_back(t);
          std::vector<char> on_a(g.vertex_count(), 0);
          for (VertexId t : pa) on_a[t] = 1;
          VertexId meet = -1;
          for (VertexId t : pb)
            if (on_a[t]) {
              meet = t;
              break;
            }
          if (meet == -1) continue;
          std::vector<EdgeId> cyc = {e};
          for (VertexId t = v; t != meet; t = par[t]) cyc.push_back(via[t]);
          for (VertexId t = w; t != meet; t = par[t]) cyc.push_back(via[t]);
          std::sort(cyc.begin(), cyc.end());
          if (std::unique(cyc.begin(), cyc.end()) != cyc.end()) continue;
          long long len = static_cast<long long>(cyc.size());
          if (len >= 3 && len < best_len) {
            best_len = len;
            best = cyc;
          }
        }
      }
    }
    return best;
  }

  void build_g3(long long budget) {
    EdgeSubset residual(g);
    std::vector<char> blocked(g.edge_count(), 0);
    for (EdgeId e : plan.f2) blocked[e] = 1;
    for (EdgeId e : plan.f3) blocked[e] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (in_x(u) && in_x(v) && !blocked[e]) residual.insert(e);
    }
    long long left = budget;
    while (left >= 4) {
      std::vector<EdgeId> cyc = shortest_cycle(residual, left);
      if (cyc.empty()) break;
      for (EdgeId e : cyc) {
        plan.g3.push_back(e);
        residual.erase(e);
      }
      left -= static_cast<long long>(cyc.size());
    }
    std::sort(plan.g3.begin(), plan.g3.end());
  }

  // --- 1.5: E4 and its repairs --------------------------------------------

  EdgeSubset g1_subset() const {
    EdgeSubset s(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (in_x(u) == in_x(v)) continue;
      if (g0.contains(e)) s.insert(e);
    }
    return s;
  }

  void build_e4(long long m11) {
    EdgeSubset g1 = g1_subset();
    EdgeSubset e4(g);
    for (EdgeId e : plan.f1) e4.insert(e);

    auto add_lowest_free = [&](VertexId y) {
      EdgeId best = -1;
      for (EdgeId e : g1.incident(y)) {
        if (e4.contains(e)) continue;
        if (best == -1 ||
            std::make_pair(jitter(seed, e), e) < std::make_pair(jitter(seed, best), best))
          best = e;
      }
      AM_CHECK(best != -1, "no free G1 edge left at y");
      e4.insert(best);
    };

    for (VertexId y = 0; y < g.vertex_count(); ++y) {
      if (in_x(y) || g.degree(y) == 0) continue;
      if (e4.degree(y) % 2 == 1) add_lowest_free(y);
    }
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
      if (in_x(y) || g.degree(y) == 0) continue;
      while (e4.degree(y) < 8) add_lowest_free(y);
    }

    long long need = m11 - e4.size();
    AM_CHECK(need >= 0, "base E4 already exceeds its target size");
    auto fullest_y = [&](int min_free) {
      VertexId best = -1;
      int best_free = -1;
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (in_x(y) || g.degree(y) == 0) continue;
        int free = g1.degree(y) - e4.degree(y);
        if (free >= min_free && free > best_free) {
          best_free = free;
          best = y;
        }
      }
      AM_CHECK(best != -1, "no Y vertex has spare G1 degree");
      return best;
    };
    while (need >= 2) {
      VertexId y = fullest_y(2);
      add_lowest_free(y);
      add_lowest_free(y);
      need -= 2;
    }
    if (need == 1) {
      add_lowest_free(fullest_y(1));
      need = 0;
    }
    AM_CHECK(e4.size() == m11, "E4 size mismatch");

    repair_e4(e4, g1);

    plan.e4 = e4.edge_ids();
    // Re-derive F1 from the final E4: the lowest E4 edge at each vertex of
    // X minus I2.
    std::vector<char> in_i2(g.vertex_count(), 0);
    for (VertexId v : plan.i2) in_i2[v] = 1;
    plan.f1.clear();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!in_x(v) || in_i2[v]) continue;
      auto mine = e4.incident(v);
      AM_CHECK(!mine.empty(), "X vertex lost all its E4 edges");
      plan.f1.push_back(mine.front());
    }
    std::sort(plan.f1.begin(), plan.f1.end());
  }

  EdgeSubset g4_of(const EdgeSubset& e4) const {
    EdgeSubset s = e4;
    for (EdgeId e : plan.f3) s.insert(e);
    return s;
  }

  void repair_e4(EdgeSubset& e4, const EdgeSubset& g1);

  // --- counts --------------------------------------------------------------

  void finish_counts() {
    plan.counts = DecompositionPlan::Counts{};
    plan.e3 = plan.g3;
    plan.e3.insert(plan.e3.end(), plan.f2.begin(), plan.f2.end());
    plan.e3.insert(plan.e3.end(), plan.f3.begin(), plan.f3.end());
    std::sort(plan.e3.begin(), plan.e3.end());

    auto& c = plan.counts;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) continue;  // spectators stay out of both classes
      (in_x(v) ? c.n_x : c.n_y) += 1;
    }
    c.n_y_odd = static_cast<long long>(plan.y_odd.size());
    c.n_y_even = static_cast<long long>(plan.y_even.size());
    c.m = g.edge_count();
    c.m1 = g0.size();
    long long gx = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (in_x(u) && in_x(v)) ++gx;
    }
    c.m2 = gx;
    c.k1 = static_cast<long long>(plan.f1.size());
    c.k2 = static_cast<long long>(plan.f2.size());
    c.k3 = static_cast<long long>(plan.f3.size());
    c.eps1 = static_cast<long long>(plan.g3.size());
    c.m21 = c.eps1 + c.k2 + c.k3;
    c.m20 = c.m2 - c.m21;
    c.m11 = (2 * c.m + 2) / 3 - c.m21;
    c.m10 = c.m1 - c.m11;
    c.l_all = census(0, c.m);
    c.l_lower = census(0, c.n_y + c.n_y_even + c.m1);
    c.l_upper = census(c.n_y + c.n_y_even + c.m1, c.m);
    c.gamma = (c.l_upper.ones + c.l_upper.twos) - c.m21;

    // Star components of F2 by size parity.
    EdgeSubset f2 = EdgeSubset::of(g, plan.f2);
    if (!f2.empty()) {
      for (const Component& comp : connected_components(g, f2).components)
        (comp.edges.size() % 2 == 1 ? c.s1 : c.s2) += 1;
    }
  }
};

}  // namespace

// Claim-style repairs: exchange E4 edges until G4 has no Eulerian component
// and, when the witness set (I2,1 plus the odd-degree Y vertex) is nonempty,
// some component carries an odd-degree vertex from the witness set and one
// from X minus I2.
void Workspace::repair_e4(EdgeSubset& e4, const EdgeSubset& g1) {
  std::vector<char> witness_static(g.vertex_count(), 0);
  for (VertexId v : plan.i21) witness_static[v] = 1;
  std::vector<char> in_i2(g.vertex_count(), 0);
  for (VertexId v : plan.i2) in_i2[v] = 1;

  auto is_witness = [&](VertexId v, const EdgeSubset& g4) {
    if (witness_static[v]) return true;
    return !in_x(v) && g4.degree(v) % 2 == 1;
  };

  int guard = g.vertex_count() + 16;
  while (true) {
    AM_CHECK(--guard > 0, "E4 repair loop exceeded its bound");
    EdgeSubset g4 = g4_of(e4);
    auto split = connected_components(g, g4);

    std::vector<int> comp_of(g.vertex_count(), -1);
    for (int ci = 0; ci < static_cast<int>(split.components.size()); ++ci)
      for (VertexId v : split.components[ci].vertices) comp_of[v] = ci;

    int eulerian = -1;
    int witness_comp = -1;
    bool satisfied = false;
    for (int ci = 0; ci < static_cast<int>(split.components.size()); ++ci) {
      const Component& comp = split.components[ci];
      bool all_even = true, has_witness_odd = false, has_x_odd = false;
      for (VertexId v : comp.vertices) {
        bool odd = g4.degree(v) % 2 == 1;
        all_even &= !odd;
        if (is_witness(v, g4)) has_witness_odd = true;  // witnesses are odd by definition
        if (odd && in_x(v) && !in_i2[v]) has_x_odd = true;
      }
      if (all_even && eulerian == -1) eulerian = ci;
      if (has_witness_odd) {
        if (witness_comp == -1) witness_comp = ci;
        if (has_x_odd) satisfied = true;
      }
    }
    if (eulerian == -1 && (witness_comp == -1 || satisfied)) break;

    const bool phase_one = eulerian != -1;
    const Component& h = split.components[phase_one ? eulerian : witness_comp];
    EdgeSubset h_sub = EdgeSubset::of(g, h.edges);

    // Preferred move: some Y vertex of H has spare G1 degree; shift one of
    // its component edges onto a free edge.
    VertexId y_spare = -1;
    for (VertexId v : h.vertices) {
      if (in_x(v) || g1.degree(v) == e4.degree(v)) continue;
      y_spare = v;
      break;
    }
    if (y_spare != -1) {
      EdgeId remove = -1;
      for (EdgeId e : e4.incident(y_spare)) {
        if (h_sub.contains(e)) {
          remove = e;
          break;
        }
      }
      EdgeId add = -1;
      for (EdgeId e : g1.incident(y_spare)) {
        if (!e4.contains(e)) {
          add = e;
          break;
        }
      }
      AM_CHECK(remove != -1 && add != -1, "spare-degree exchange lost its edges");
      e4.erase(remove);
      e4.insert(add);
      continue;
    }

    // Every Y vertex of H is E4-saturated; bring in a fresh star at a
    // spare-degree vertex elsewhere.
    VertexId y_star = -1;
    std::vector<EdgeId> star_edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (in_x(v) || g.degree(v) == 0) continue;
      if (g1.degree(v) - e4.degree(v) >= 3) {
        y_star = v;
        break;
      }
    }
    AM_CHECK(y_star != -1, "no Y vertex with three spare G1 edges");
    for (EdgeId e : g1.incident(y_star)) {
      if (!e4.contains(e)) star_edges.push_back(e);
      if (star_edges.size() == 3) break;
    }
    std::array<VertexId, 3> xs{};
    for (int i = 0; i < 3; ++i) xs[i] = g.other_end(star_edges[i], y_star);

    // Q_{xi,xj} is non-Eulerian iff some vertex of the merged components
    // stays odd after flipping the two fresh endpoints.
    auto q_non_eulerian = [&](int i, int j) {
      std::array<int, 3> cids = {comp_of[y_star], comp_of[xs[i]], comp_of[xs[j]]};
      for (int cid : cids) {
        AM_CHECK(cid != -1, "fresh endpoint outside every component");
        for (VertexId v : split.components[cid].vertices) {
          bool odd = g4.degree(v) % 2 == 1;
          if (v == xs[i] || v == xs[j]) odd = !odd;
          if (odd) return true;
        }
      }
      return false;
    };
    auto first_non_eulerian_pair = [&]() {
      for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
        if (q_non_eulerian(i, j)) return std::pair{i, j};
      throw internal_error("every candidate Q graph is Eulerian");
    };
    auto in_h = [&](VertexId v) { return comp_of[v] == comp_of[h.vertices.front()]; };

    // Pick the Y vertex whose component edges we break; all its G1 edges
    // live in H here.
    VertexId y = -1;
    for (VertexId v : h.vertices) {
      if (!in_x(v)) {
        y = v;
        break;
      }
    }
    AM_CHECK(y != -1, "component without a Y vertex");

    EdgeId rem1 = -1, rem2 = -1;
    int add_i = -1, add_j = -1;
    if (phase_one) {
      auto [u1e, u2e] = two_removable_edges(g, h, y);
      VertexId u1 = g.other_end(u1e, y), u2 = g.other_end(u2e, y);
      bool any_in_h = in_h(xs[0]) || in_h(xs[1]) || in_h(xs[2]);
      if (!any_in_h) {
        std::tie(add_i, add_j) = first_non_eulerian_pair();
      } else {
        int i1 = -1;
        for (int i = 0; i < 3; ++i)
          if (xs[i] != u1 && xs[i] != u2) {
            i1 = i;
            break;
          }
        AM_CHECK(i1 != -1, "three fresh endpoints clash with both removals");
        int i2 = -1;
        if (in_h(xs[i1])) {
          i2 = i1 == 0 ? 1 : 0;
        } else {
          for (int i = 0; i < 3; ++i)
            if (i != i1 && in_h(xs[i])) {
              i2 = i;
              break;
            }
        }
        AM_CHECK(i2 != -1, "no partner endpoint inside the component");
        add_i = i1;
        add_j = i2;
      }
      rem1 = u1e;
      rem2 = u2e;
    } else {
      // Witness component without an odd X vertex.
      std::vector<EdgeId> cut = bridges(g, h_sub);
      std::vector<EdgeId> cut_at_y;
      for (EdgeId e : h_sub.incident(y))
        if (std::binary_search(cut.begin(), cut.end(), e)) cut_at_y.push_back(e);

      if (cut_at_y.size() >= 3) {
        auto [qi, qj] = first_non_eulerian_pair();
        for (size_t a = 0; a < cut_at_y.size() && rem1 == -1; ++a) {
          for (size_t b = a + 1; b < cut_at_y.size(); ++b) {
            VertexId ua = g.other_end(cut_at_y[a], y), ub = g.other_end(cut_at_y[b], y);
            if ((ua == xs[qi] && ub == xs[qj]) || (ua == xs[qj] && ub == xs[qi])) continue;
            rem1 = cut_at_y[a];
            rem2 = cut_at_y[b];
            break;
          }
        }
        AM_CHECK(rem1 != -1, "all cut pairs clash with the fresh endpoints");
        add_i = qi;
        add_j = qj;
      } else {
        auto [v1e, v2e] = two_removable_edges(g, h, y);
        VertexId v1 = g.other_end(v1e, y), v2 = g.other_end(v2e, y);
        bool any_in_h = in_h(xs[0]) || in_h(xs[1]) || in_h(xs[2]);
        if (!any_in_h) {
          std::tie(add_i, add_j) = first_non_eulerian_pair();
        } else {
          int a1 = -1;
          for (int i = 0; i < 3; ++i)
            if (xs[i] != v1 && xs[i] != v2) {
              a1 = i;
              break;
            }
          AM_CHECK(a1 != -1, "three fresh endpoints clash with both removals");
          int a2 = -1;
          if (in_h(xs[a1])) {
            a2 = a1 == 0 ? 1 : 0;
          } else {
            for (int i = 0; i < 3; ++i)
              if (i != a1 && in_h(xs[i])) {
                a2 = i;
                break;
              }
          }
          AM_CHECK(a2 != -1, "no partner endpoint inside the component");
          add_i = a1;
          add_j = a2;
        }
        rem1 = v1e;
        rem2 = v2e;
      }
    }

    e4.erase(rem1);
    e4.erase(rem2);
    e4.insert(star_edges[add_i]);
    e4.insert(star_edges[add_j]);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (in_x(v) || g.degree(v) == 0) continue;
      AM_CHECK(e4.degree(v) >= 8, "repair broke the degree floor");
    }
  }
}

DecompositionPlan decompose(const BipartiteGraph& g, std::uint64_t seed) {
  AM_REQUIRE(g.min_degree() >= 15, "decomposition requires minimum degree 15");
  Workspace ws(g, seed);
  ws.plan.x_side.assign(g.vertex_count(), 0);
  ws.pick_cover_sets();
  ws.build_forests();

  // Budget for the even subgraph: the {1,2}-labels among the greatest m2.
  {
    long long m = g.edge_count();
    long long m1 = ws.g0.size();
    long long n_y = 0, n_y_even = static_cast<long long>(ws.plan.y_even.size());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!ws.in_x(v) && g.degree(v) > 0) ++n_y;
    LabelCensus upper = census(n_y + n_y_even + m1, m);
    long long budget = upper.ones + upper.twos - (static_cast<long long>(ws.plan.f2.size()) +
                                                  static_cast<long long>(ws.plan.f3.size()));
    ws.build_g3(std::max<long long>(budget, 0));
  }

  ws.finish_counts();
  ws.build_e4(ws.plan.counts.m11);
  ws.finish_counts();  // recompute: building E4 re-derives F1 (k1 unchanged)

  validate_plan(g, ws.plan);
  return ws.plan;
}

namespace {

void check_star_forest(const BipartiteGraph& g, const std::vector<EdgeId>& edges,
                       const char* what) {
  if (edges.empty()) return;
  EdgeSubset s = EdgeSubset::of(g, edges);
  for (const Component& c : connected_components(g, s).components) {
    int centers = 0;
    for (VertexId v : c.vertices)
      if (s.degree(v) >= 2) ++centers;
    AM_CHECK(centers <= 1, std::string(what) + ": component is not a star");
  }
}

}  // namespace

void validate_plan(const BipartiteGraph& g, const DecompositionPlan& plan) {
  const auto& c = plan.counts;
  std::vector<char> category(g.edge_count(), 0);  // 1=M 2=E1 3=E2 4=G1 5=G[X]
  auto tag = [&](const std::vector<EdgeId>& edges, char cat, const char* what) {
    for (EdgeId e : edges) {
      AM_CHECK(category[e] == 0, std::string(what) + ": edge already claimed");
      category[e] = cat;
    }
  };
  tag(plan.m_edges, 1, "M");
  tag(plan.e1, 2, "E1");
  tag(plan.e2, 3, "E2");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (plan.in_x(u) && plan.in_x(v)) {
      AM_CHECK(category[e] == 0, "G[X] edge claimed by a cover set");
      category[e] = 5;
    } else if (category[e] == 0) {
      category[e] = 4;
    }
    AM_CHECK(plan.in_x(u) || plan.in_x(v), "Y is not independent");
  }

  // Coverage multiplicities.
  std::vector<int> m_cov(g.vertex_count(), 0), e1_cov(g.vertex_count(), 0),
      e2_cov(g.vertex_count(), 0);
  for (EdgeId e : plan.m_edges) {
    ++m_cov[g.edge(e).first];
    ++m_cov[g.edge(e).second];
  }
  for (EdgeId e : plan.e1) {
    ++e1_cov[g.edge(e).first];
    ++e1_cov[g.edge(e).second];
  }
  for (EdgeId e : plan.e2) {
    ++e2_cov[g.edge(e).first];
    ++e2_cov[g.edge(e).second];
  }
  std::vector<char> in_z(g.vertex_count(), 0), in_even(g.vertex_count(), 0);
  for (VertexId v : plan.z) in_z[v] = 1;
  for (VertexId v : plan.y_even) in_even[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (plan.in_x(v)) {
      AM_CHECK(m_cov[v] == 1, "M must saturate X");
    } else if (g.degree(v) > 0) {
      AM_CHECK(m_cov[v] == (in_z[v] ? 0 : 1), "M coverage on Y");
      AM_CHECK(e1_cov[v] == (in_z[v] ? 1 : 0), "E1 must cover Z exactly once");
      AM_CHECK(e2_cov[v] == (in_even[v] ? 1 : 0), "E2 must cover Y_even exactly once");
    }
  }

  // G0 degrees: even and >= 14 on Y; I1 vertices not isolated.
  std::vector<int> g0_deg(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (category[e] != 4) continue;
    ++g0_deg[g.edge(e).first];
    ++g0_deg[g.edge(e).second];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (plan.in_x(v) || g.degree(v) == 0) continue;
    AM_CHECK(g0_deg[v] % 2 == 0 && g0_deg[v] >= 14, "G0 degree on Y must be even and >= 14");
  }
  for (VertexId v : plan.i1) AM_CHECK(g0_deg[v] > 0, "I1 vertex isolated in G0");
  for (VertexId v : plan.i2) AM_CHECK(g0_deg[v] == 0, "I2 vertex not isolated in G0");

  // Forests.
  std::vector<char> in_i2(g.vertex_count(), 0), in_i21(g.vertex_count(), 0);
  for (VertexId v : plan.i2) in_i2[v] = 1;
  for (VertexId v : plan.i21) in_i21[v] = 1;
  {
    std::vector<int> cov(g.vertex_count(), 0);
    for (EdgeId e : plan.f1) {
      auto [u, v] = g.edge(e);
      VertexId x = plan.in_x(u) ? u : v;
      AM_CHECK(category[e] == 4, "F1 must live in G1");
      ++cov[x];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      bool should = plan.in_x(v) && !in_i2[v] && g.degree(v) > 0;
      AM_CHECK(cov[v] == (should ? 1 : 0), "F1 must cover X minus I2 exactly once");
    }
    check_star_forest(g, plan.f1, "F1");
  }
  {
    std::vector<int> cov(g.vertex_count(), 0);
    for (EdgeId e : plan.f2) {
      auto [u, v] = g.edge(e);
      AM_CHECK(in_i2[u] && !in_i21[u] && in_i2[v] && !in_i21[v], "F2 must live inside I2 minus I2,1");
      ++cov[u];
      ++cov[v];
    }
    for (VertexId v : plan.i2)
      if (!in_i21[v]) AM_CHECK(cov[v] >= 1, "F2 must cover I2 minus I2,1");
    check_star_forest(g, plan.f2, "F2");
  }
  {
    std::vector<int> cov(g.vertex_count(), 0);
    for (EdgeId e : plan.f3) {
      auto [u, v] = g.edge(e);
      VertexId a = in_i21[u] ? u : v;
      VertexId b = g.other_end(e, a);
      AM_CHECK(in_i21[a] && plan.in_x(b) && !in_i2[b], "F3 must join I2,1 to X minus I2");
      ++cov[a];
    }
    for (VertexId v : plan.i21) AM_CHECK(cov[v] == 1, "F3 must cover I2,1 exactly once");
    check_star_forest(g, plan.f3, "F3");
  }

  // G3: even subgraph of G[X] minus (F2 u F3); E3 partitions.
  {
    std::vector<char> in_f23(g.edge_count(), 0);
    for (EdgeId e : plan.f2) in_f23[e] = 1;
    for (EdgeId e : plan.f3) in_f23[e] = 1;
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : plan.g3) {
      AM_CHECK(category[e] == 5 && !in_f23[e], "G3 must avoid F2, F3 and non-G[X] edges");
      ++deg[g.edge(e).first];
      ++deg[g.edge(e).second];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      AM_CHECK(deg[v] % 2 == 0, "G3 must be an even subgraph");
  }
  {
    std::vector<EdgeId> e3 = plan.g3;
    e3.insert(e3.end(), plan.f2.begin(), plan.f2.end());
    e3.insert(e3.end(), plan.f3.begin(), plan.f3.end());
    std::sort(e3.begin(), e3.end());
    AM_CHECK(e3 == plan.e3, "E3 must equal G3 u F2 u F3");
  }

  // E4 and G4.
  EdgeSubset e4 = EdgeSubset::of(g, plan.e4);
  {
    for (EdgeId e : plan.e4) AM_CHECK(category[e] == 4, "E4 must live in G1");
    for (EdgeId e : plan.f1) AM_CHECK(e4.contains(e), "E4 must contain F1");
    AM_CHECK(static_cast<long long>(plan.e4.size()) == c.m11, "E4 size must be m11");
    int odd = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (plan.in_x(v) || g.degree(v) == 0) continue;
      AM_CHECK(e4.degree(v) >= 8, "every Y vertex needs E4 degree >= 8");
      if (e4.degree(v) % 2 == 1) ++odd;
    }
    AM_CHECK(odd <= 1, "at most one Y vertex of odd E4 degree");
    AM_CHECK(odd == (c.m11 % 2 == 0 ? 0 : 1), "odd-degree count must match m11 parity");
  }
  {
    EdgeSubset g4 = e4;
    for (EdgeId e : plan.f3) g4.insert(e);
    auto split = connected_components(g, g4);
    std::vector<char> witness(g.vertex_count(), 0);
    for (VertexId v : plan.i21) witness[v] = 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!plan.in_x(v) && g4.degree(v) % 2 == 1) witness[v] = 1;
    bool any_witness = false;
    bool satisfied = false;
    for (const Component& comp : split.components) {
      bool all_even = true, w_odd = false, x_odd = false;
      for (VertexId v : comp.vertices) {
        bool odd = g4.degree(v) % 2 == 1;
        all_even &= !odd;
        if (witness[v]) w_odd = true;
        if (odd && plan.in_x(v) && !in_i2[v]) x_odd = true;
      }
      AM_CHECK(!all_even, "G4 contains an Eulerian component");
      any_witness |= w_odd;
      satisfied |= (w_odd && x_odd);
    }
    AM_CHECK(!any_witness || satisfied, "no component pairs witness and X-side odd vertices");
  }

  // Count identities and bounds.
  AM_CHECK(c.m == g.edge_count(), "m mismatch");
  AM_CHECK(c.m == c.n_y + c.n_y_even + c.m1 + c.m2, "m = n_y + n_y_even + m1 + m2");
  AM_CHECK(c.n_x <= c.n_y, "n_x <= n_y");
  AM_CHECK(c.n_y_odd + c.n_y_even == c.n_y, "Y parity classes must partition Y");
  AM_CHECK(c.m21 == c.eps1 + c.k2 + c.k3, "m21 = eps1 + k2 + k3");
  AM_CHECK(c.m20 == c.m2 - c.m21, "m20 = m2 - m21");
  AM_CHECK(c.m11 == (2 * c.m + 2) / 3 - c.m21, "m11 = ceil(2m/3) - m21");
  AM_CHECK(c.m10 == c.m1 - c.m11, "m10 = m1 - m11");
  AM_CHECK(c.m1 >= 14 * c.n_y, "m1 >= 14 n_y");
  AM_CHECK(c.m10 > 2 * c.n_y, "m10 > 2 n_y");
  AM_CHECK(c.l_all.ones + c.l_all.twos == (2 * c.m + 2) / 3, "|J| = ceil(2m/3)");
  AM_CHECK(c.gamma == (c.l_upper.ones + c.l_upper.twos) - c.m21, "gamma definition");
  AM_CHECK(c.gamma == c.m20 - c.l_upper.zeros, "gamma = m20 - l_{2,0}");
  AM_CHECK(c.m11 - (c.l_lower.ones + c.l_lower.twos) == c.gamma, "m11 - (l11+l12) = gamma");
  AM_CHECK(2 * c.gamma > -c.n_x && c.gamma < c.n_x, "gamma out of range");
  AM_CHECK(c.k1 + c.k2 + c.k3 <= c.n_x, "k1+k2+k3 <= n_x");
  AM_CHECK(c.k2 + c.k3 <= c.n_x - 14, "k2+k3 <= n_x - 14");
  if (static_cast<long long>(plan.i2.size()) > static_cast<long long>(plan.i21.size())) {
    AM_CHECK(c.k1 + c.k2 + c.k3 <= c.n_x - 1, "k1+k2+k3 <= n_x - 1");
    AM_CHECK(c.k2 + c.k3 <= static_cast<long long>(plan.i2.size()) - 1, "k2+k3 <= |I2| - 1");
    AM_CHECK(c.k2 + c.k3 <= c.n_x - 15, "k2+k3 <= n_x - 15");
  }
}

std::string plan_to_json(const DecompositionPlan& plan) {
  std::ostringstream os;
  auto vec = [&](const char* name, const auto& v, bool last = false) {
    os << "  \"" << name << "\": [";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]" << (last ? "\n" : ",\n");
  };
  std::vector<VertexId> xs, ys;
  for (VertexId v = 0; v < static_cast<VertexId>(plan.x_side.size()); ++v)
    (plan.in_x(v) ? xs : ys).push_back(v);
  os << "{\n";
  vec("x", xs);
  vec("y", ys);
  vec("z", plan.z);
  vec("i1", plan.i1);
  vec("i2", plan.i2);
  vec("i21", plan.i21);
  vec("y_odd", plan.y_odd);
  vec("y_even", plan.y_even);
  vec("matching", plan.m_edges);
  vec("e1", plan.e1);
  vec("e2", plan.e2);
  vec("e3", plan.e3);
  vec("e4", plan.e4);
  vec("f1", plan.f1);
  vec("f2", plan.f2);
  vec("f3", plan.f3);
  vec("g3", plan.g3);
  vec("y0", plan.y0);
  vec("e40", plan.e40);
  const auto& c = plan.counts;
  os << "  \"counts\": {";
  os << "\"n_x\":" << c.n_x << ",\"n_y\":" << c.n_y << ",\"n_y_odd\":" << c.n_y_odd
     << ",\"n_y_even\":" << c.n_y_even << ",\"m\":" << c.m << ",\"m1\":" << c.m1
     << ",\"m2\":" << c.m2 << ",\"m11\":" << c.m11 << ",\"m10\":" << c.m10
     << ",\"m21\":" << c.m21 << ",\"m20\":" << c.m20 << ",\"k1\":" << c.k1 << ",\"k2\":" << c.k2
     << ",\"k3\":" << c.k3 << ",\"s1\":" << c.s1 << ",\"s2\":" << c.s2 << ",\"eps1\":" << c.eps1
     << ",\"gamma\":" << c.gamma << "}\n";
  os << "}\n";
  return os.str();
}

}  // namespace antimagic
