#include "antimagic/assembler.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "antimagic/errors.hpp"
#include "antimagic/mod3.hpp"
#include "antimagic/pairing.hpp"
#include "antimagic/structure.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

namespace {

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Assembler {
  const BipartiteGraph& g;
  DecompositionPlan& plan;
  const DecompositionPlan::Counts& c;

  std::vector<char> in_i2, in_i21, in_e3, in_e4, in_g1, in_f2, in_f3;
  EdgeSubset e4_sub, g4_sub;
  std::vector<char> mod3_x_side;  // X side for the residue labeling: X minus I2

  std::vector<long long> labels;
  std::vector<long long> sums;
  LabelPartition part;
  ResiduePlan rp;
  std::vector<long long> sigma1;
  std::vector<long long> sigma2;
  int step9_case = 0;
  bool partner_switched = false;

  // Greatest-unused counters per residue class for the descending phase.
  long long next1, next2;

  std::vector<VertexId> ys_by_degree;             // Y sorted by (deg, id)
  std::vector<std::array<EdgeId, 6>> designated;  // per vertex, -1 elsewhere

  explicit Assembler(const BipartiteGraph& graph, DecompositionPlan& p)
      : g(graph), plan(p), c(p.counts), e4_sub(graph), g4_sub(graph) {
    auto mark = [&](const std::vector<VertexId>& vs) {
      std::vector<char> out(g.vertex_count(), 0);
      for (VertexId v : vs) out[v] = 1;
      return out;
    };
    in_i2 = mark(plan.i2);
    in_i21 = mark(plan.i21);
    auto mark_e = [&](const std::vector<EdgeId>& es) {
      std::vector<char> out(g.edge_count(), 0);
      for (EdgeId e : es) out[e] = 1;
      return out;
    };
    in_e3 = mark_e(plan.e3);
    in_e4 = mark_e(plan.e4);
    in_f2 = mark_e(plan.f2);
    in_f3 = mark_e(plan.f3);

    std::vector<char> used = mark_e(plan.m_edges);
    for (EdgeId e : plan.e1) used[e] = 1;
    for (EdgeId e : plan.e2) used[e] = 1;
    in_g1.assign(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (plan.in_x(u) != plan.in_x(v) && !used[e]) in_g1[e] = 1;
    }

    e4_sub = EdgeSubset::of(g, plan.e4);
    g4_sub = e4_sub;
    for (EdgeId e : plan.f3) g4_sub.insert(e);
    mod3_x_side.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      mod3_x_side[v] = plan.in_x(v) && !in_i2[v];

    labels.assign(g.edge_count(), 0);
    sums.assign(g.vertex_count(), 0);
    next1 = c.l_all.ones;
    next2 = c.l_all.twos;

    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!plan.in_x(v) && g.degree(v) > 0) ys_by_degree.push_back(v);
    std::sort(ys_by_degree.begin(), ys_by_degree.end(), [&](VertexId a, VertexId b) {
      return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
    });
  }

  void put(EdgeId e, long long value) {
    AM_CHECK(labels[e] == 0 && value > 0, "label slot misuse");
    labels[e] = value;
    auto [u, v] = g.edge(e);
    sums[u] += value;
    sums[v] += value;
  }

  void relabel(EdgeId e, long long value) {
    auto [u, v] = g.edge(e);
    sums[u] += value - labels[e];
    sums[v] += value - labels[e];
    labels[e] = value;
  }

  void swap_labels(EdgeId a, EdgeId b) {
    long long va = labels[a], vb = labels[b];
    relabel(a, vb);
    relabel(b, va);
  }

  long long take_greatest(int residue) {
    if (residue == 1) {
      AM_CHECK(next1 > 0, "1-label pool exhausted");
      return 3 * (next1--) - 2;
    }
    AM_CHECK(next2 > 0, "2-label pool exhausted");
    return 3 * (next2--) - 1;
  }

  // ---- Table 1: the label partition --------------------------------------

  void build_zero_sets() {
    const long long l0 = c.l_all.zeros;
    auto range = [](long long lo, long long hi) {  // indices lo..hi as 0-labels
      std::vector<long long> out;
      for (long long i = lo; i <= hi; ++i) out.push_back(3 * i);
      return out;
    };
    part.o1 = range(l0 - c.m20 + 1, l0);
    if (c.n_y_even % 2 == 1) {
      part.o2 = range(1, c.n_y_even);
    } else {
      part.o2 = range(1, c.n_y_even - 1);
      if (c.n_y_even > 0) part.o2.push_back(3 * (3 * c.n_y_even / 2));
      std::sort(part.o2.begin(), part.o2.end());
    }
    part.o3 = range(c.n_y + c.n_y_even + 1, l0 - c.m20);
    std::vector<long long> o4;
    if (c.n_y_even % 2 == 1) {
      o4 = range(c.n_y_even + 1, c.n_y_even + c.n_y);
    } else {
      for (long long i = std::max<long long>(c.n_y_even, 1); i <= c.n_y_even + c.n_y; ++i)
        if (i != 3 * c.n_y_even / 2) o4.push_back(3 * i);
    }
    AM_CHECK(static_cast<long long>(o4.size()) == c.n_y, "O4 must hold n_y labels");
    part.o41.assign(o4.begin(), o4.begin() + (c.n_y - c.n_x));
    part.o42.assign(o4.begin() + (c.n_y - c.n_x), o4.end());

    // The four zero sets must tile the 0-labels exactly.
    std::vector<long long> all;
    for (const auto* s : {&part.o1, &part.o2, &part.o3, &part.o41, &part.o42})
      all.insert(all.end(), s->begin(), s->end());
    std::sort(all.begin(), all.end());
    std::vector<long long> expect;
    for (long long i = 1; i <= l0; ++i) expect.push_back(3 * i);
    AM_CHECK(all == expect, "zero-label sets do not tile the 0-labels");
  }

  // Sizes of J2's residue classes per the star parities and l1 vs l2.
  std::pair<long long, long long> j2_class_sizes() const {
    const long long l1 = c.l_all.ones, l2 = c.l_all.twos, k2 = c.k2;
    AM_CHECK(l1 == l2 || l1 == l2 + 1, "label census out of shape");
    bool plain = c.s1 > 0 || c.s2 % 2 == 0;
    if (plain) {
      if (l1 == l2 + 1) return {(k2 + 1) / 2, k2 / 2};
      return {k2 / 2, (k2 + 1) / 2};
    }
    AM_CHECK(k2 >= 2 && k2 % 2 == 0, "even-star-only case needs even k2 >= 2");
    if (l1 == l2 + 1) return {(k2 + 2) / 2, (k2 - 2) / 2};
    return {(k2 - 2) / 2, (k2 + 2) / 2};
  }

  void build_one_two_sets() {
    const long long l1 = c.l_all.ones, l2 = c.l_all.twos;
    AM_CHECK(c.eps1 % 2 == 0, "even subgraph of a bipartite graph has even size");
    for (long long i = 1; i <= c.eps1 / 2; ++i) {
      part.j1.push_back(3 * (l1 - i) + 1);
      part.j1.push_back(3 * (l2 - i) + 2);
    }
    part.j1 = sorted(std::move(part.j1));

    auto [j2_ones, j2_twos] = j2_class_sizes();
    for (long long i = 1; i <= j2_ones; ++i) part.j2.push_back(3 * (l1 - c.eps1 / 2 - i) + 1);
    for (long long j = 1; j <= j2_twos; ++j) part.j2.push_back(3 * (l2 - c.eps1 / 2 - j) + 2);
    part.j2 = sorted(std::move(part.j2));

    long long pool1 = l1 - c.eps1 / 2 - j2_ones;
    long long pool2 = l2 - c.eps1 / 2 - j2_twos;
    AM_CHECK(pool1 >= 0 && pool2 >= 0, "negative pool");
    AM_CHECK(std::llabs(pool1 - pool2) <= 2, "G4 label pool imbalance above two");
    AM_CHECK(pool1 + pool2 == c.m11 + c.k3, "pool must cover E4 and F3");

    rp = assign_residues(g, g4_sub, mod3_x_side, pool1, pool2);
    if (auto sw = plan_both_residue_switch(g, g4_sub, mod3_x_side, rp, in_i21))
      apply_switch_to_plan(g, rp, *sw);

    long long rho31 = 0, rho32 = 0;
    for (EdgeId e : plan.f3) (rp.residue_of_edge[e] == 1 ? rho31 : rho32) += 1;
    part.theta1 = pool1 - rho31;
    part.theta2 = pool2 - rho32;
    part.theta = std::min(part.theta1, part.theta2);
    AM_CHECK(part.theta1 + part.theta2 == c.m11, "theta split must cover E4");
    AM_CHECK(std::llabs(part.theta1 - part.theta2) <= 2, "theta imbalance above two");
    AM_CHECK(part.theta == (part.theta1 == part.theta2 ? c.m11 / 2 : (c.m11 - 1) / 2),
             "theta disagrees with the class split");
    AM_CHECK(2 * part.theta >= 9 * c.n_y, "theta below its floor");

    for (long long i = part.theta1 + 1; i <= pool1; ++i) part.j3.push_back(3 * i - 2);
    for (long long i = part.theta2 + 1; i <= pool2; ++i) part.j3.push_back(3 * i - 1);
    part.j3 = sorted(std::move(part.j3));

    for (long long i = 1; i <= part.theta1; ++i) part.j4.push_back(3 * i - 2);
    for (long long i = 1; i <= part.theta2; ++i) part.j4.push_back(3 * i - 1);
    part.j4 = sorted(std::move(part.j4));

    part.alpha = c.n_y_even + (c.l_all.zeros - c.m20 - part.theta + 1);
    AM_CHECK(std::llabs(part.alpha) < 2 * c.n_y, "alpha out of range");

    // J4 subdivision.
    if (part.theta1 > part.theta) {
      for (long long i = part.theta + 1; i <= part.theta1; ++i) part.j40.push_back(3 * i - 2);
    } else if (part.theta2 > part.theta) {
      for (long long i = part.theta + 1; i <= part.theta2; ++i) part.j40.push_back(3 * i - 1);
    }
    for (long long i = 1; i <= c.n_y_odd; ++i) {
      part.j41.push_back(3 * i - 2);
      part.j41.push_back(3 * i - 1);
    }
    part.j41 = sorted(std::move(part.j41));
    long long a0 = std::max<long long>(0, part.alpha);
    for (long long i = 1; i <= c.n_y_even; ++i) {
      part.j42.push_back(3 * (c.n_y_odd + a0) + 3 * i - 2);
      part.j42.push_back(3 * (c.n_y_odd + a0) + 3 * i - 1);
    }
    part.j42 = sorted(std::move(part.j42));
    if (part.alpha >= 0) {
      for (long long i = 1; i <= part.alpha; ++i) {
        part.j43.push_back(3 * c.n_y_odd + 3 * i - 2);
        part.j43.push_back(3 * c.n_y_odd + 3 * i - 1);
      }
      for (long long i = c.n_y + part.alpha + 1; i <= part.theta; ++i) {
        part.j44.push_back(3 * i - 2);
        part.j44.push_back(3 * i - 1);
      }
    } else {
      for (long long i = 1; i <= -part.alpha; ++i) {
        part.j43.push_back(3 * part.theta - 3 * i + 1);
        part.j43.push_back(3 * part.theta - 3 * i + 2);
      }
      for (long long i = c.n_y + 1; i <= part.theta + part.alpha; ++i) {
        part.j44.push_back(3 * i - 2);
        part.j44.push_back(3 * i - 1);
      }
    }
    part.j43 = sorted(std::move(part.j43));
    part.j44 = sorted(std::move(part.j44));

    std::vector<long long> tiling;
    for (const auto* s : {&part.j40, &part.j41, &part.j42, &part.j43, &part.j44})
      tiling.insert(tiling.end(), s->begin(), s->end());
    AM_CHECK(sorted(std::move(tiling)) == part.j4, "J4 subdivision does not tile J4");

    part.p1 = 3 * c.n_y_odd;
    part.p3 = part.alpha >= 0 ? 6 * c.n_y_odd + 3 * part.alpha : 6 * part.theta + 3 * part.alpha;
    part.p4 = 3 * (c.n_y + part.alpha + part.theta);
    AM_CHECK(part.p4 == 3 * (c.n_y + c.n_y_even + c.l_all.zeros - c.m20 + 1),
             "pairing targets disagree");
  }

  void choose_y0() {
    long long diff = part.theta1 - part.theta2;
    plan.y0.clear();
    plan.e40.clear();
    if (diff == 0) {
      AM_CHECK(c.m11 % 2 == 0, "balanced classes need even m11");
      return;
    }
    int maj = diff > 0 ? 1 : 2;
    VertexId yp = -1;
    if (std::llabs(diff) == 1) {
      AM_CHECK(c.m11 % 2 == 1, "off-by-one classes need odd m11");
      for (VertexId v : ys_by_degree)
        if (e4_sub.degree(v) % 2 == 1) {
          AM_CHECK(yp == -1, "two odd-degree Y vertices");
          yp = v;
        }
    } else {
      for (VertexId v : ys_by_degree)
        if (std::abs(rp.ones_at[v] - rp.twos_at[v]) == 2) {
          AM_CHECK(yp == -1, "two doubly unbalanced Y vertices");
          yp = v;
        }
    }
    AM_CHECK(yp != -1, "missing the special Y vertex");
    plan.y0.push_back(yp);
    int want = std::llabs(diff) == 1 ? 1 : 2;
    for (EdgeId e : e4_sub.incident(yp)) {
      if (rp.residue_of_edge[e] != maj) continue;
      plan.e40.push_back(e);
      if (static_cast<int>(plan.e40.size()) == want) break;
    }
    AM_CHECK(static_cast<int>(plan.e40.size()) == want, "not enough majority edges at y0");
  }

  void pick_designated() {
    std::vector<char> in_e40(g.edge_count(), 0);
    for (EdgeId e : plan.e40) in_e40[e] = 1;
    designated.assign(g.vertex_count(), {-1, -1, -1, -1, -1, -1});
    for (VertexId y : ys_by_degree) {
      int got1 = 0, got2 = 0;
      for (EdgeId e : e4_sub.incident(y)) {
        if (in_e40[e]) continue;
        if (rp.residue_of_edge[e] == 1 && got1 < 3) designated[y][2 * got1++] = e;
        if (rp.residue_of_edge[e] == 2 && got2 < 3) designated[y][2 * got2++ + 1] = e;
      }
      AM_CHECK(got1 == 3 && got2 == 3, "fewer than three designated edges per class");
    }
  }

  // ---- Steps ---------------------------------------------------------------

  void step1() {
    size_t k = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      if (!plan.in_x(u) || !plan.in_x(v) || in_e3[e]) continue;
      AM_CHECK(k < part.o1.size(), "O1 exhausted");
      put(e, part.o1[k++]);
    }
    AM_CHECK(k == part.o1.size(), "O1 left over");
  }

  void step2() {
    if (plan.g3.empty()) return;
    EdgeSubset g3 = EdgeSubset::of(g, plan.g3);
    for (const Component& comp : connected_components(g, g3).components) {
      Trail tour = euler_tour(g, comp);
      int cls = 1;
      for (EdgeId e : tour.edges) {
        put(e, take_greatest(cls));
        cls = 3 - cls;
      }
    }
    AM_CHECK(next1 == c.l_all.ones - c.eps1 / 2 && next2 == c.l_all.twos - c.eps1 / 2,
             "G3 must consume the top labels evenly");
  }

  void step3() {
    if (plan.f2.empty()) return;
    EdgeSubset f2 = EdgeSubset::of(g, plan.f2);
    auto comps = connected_components(g, f2).components;
    std::stable_partition(comps.begin(), comps.end(),
                          [](const Component& s) { return s.edges.size() % 2 == 0; });
    for (const Component& star : comps) {
      long long h = static_cast<long long>(star.edges.size());
      int mu = 3 * next1 - 2 > 3 * next2 - 1 ? 1 : 2;
      long long n_mu = h % 2 == 0 ? h / 2 + 1 : (h + 1) / 2;
      for (size_t i = 0; i < star.edges.size(); ++i)
        put(star.edges[i], take_greatest(static_cast<long long>(i) < n_mu ? mu : 3 - mu));
    }
    auto [j2_ones, j2_twos] = j2_class_sizes();
    AM_CHECK(next1 == c.l_all.ones - c.eps1 / 2 - j2_ones &&
                 next2 == c.l_all.twos - c.eps1 / 2 - j2_twos,
             "F2 consumed labels outside J2");
  }

  void step4_1() {
    for (EdgeId e : plan.f3) put(e, take_greatest(rp.residue_of_edge[e]));
    AM_CHECK(next1 == part.theta1 && next2 == part.theta2,
             "leftover pool after F3 must be exactly J4");
  }

  void assign_link(const LabelPair& pr, EdgeId one_edge, EdgeId two_edge) {
    long long v1 = pr.lo % 3 == 1 ? pr.lo : pr.hi;
    long long v2 = pr.lo % 3 == 2 ? pr.lo : pr.hi;
    AM_CHECK(v1 % 3 == 1 && v2 % 3 == 2, "pair must hold one label of each class");
    AM_CHECK(rp.residue_of_edge[one_edge] == 1 && rp.residue_of_edge[two_edge] == 2,
             "link edges disagree with the residue plan");
    put(one_edge, v1);
    put(two_edge, v2);
  }

  void step4_3() {
    // 1) the unmatched top labels go to the special edges.
    AM_CHECK(part.j40.size() == plan.e40.size(), "J40 and E40 must match");
    for (size_t i = 0; i < plan.e40.size(); ++i) {
      AM_CHECK(rp.residue_of_edge[plan.e40[i]] == static_cast<int>(part.j40[i] % 3),
               "special edge residue mismatch");
      put(plan.e40[i], part.j40[i]);
    }

    // 2) odd-degree Y vertices: pair sums p1.
    {
      long long i = 1;
      for (VertexId y : ys_by_degree) {
        if (g.degree(y) % 2 == 0) continue;
        LabelPair pr{3 * i - 2, 3 * (c.n_y_odd + 1 - i) - 1};
        if (pr.lo > pr.hi) std::swap(pr.lo, pr.hi);
        AM_CHECK(pr.sum() == part.p1, "p1 pairing broken");
        assign_link(pr, designated[y][0], designated[y][1]);
        ++i;
      }
      AM_CHECK(i == c.n_y_odd + 1, "odd-degree pair count mismatch");
    }

    // 3) even-degree Y vertices: the run pairing, sums ascending along the
    // degree order.
    if (c.n_y_even > 0) {
      auto pairs = pair_balanced_run(3 * (c.n_y_odd + std::max<long long>(0, part.alpha)),
                                     c.n_y_even);
      std::sort(pairs.begin(), pairs.end(),
                [](const LabelPair& a, const LabelPair& b) { return a.sum() < b.sum(); });
      size_t k = 0;
      for (VertexId y : ys_by_degree) {
        if (g.degree(y) % 2 == 1) continue;
        assign_link(pairs[k++], designated[y][0], designated[y][1]);
      }
      AM_CHECK(k == pairs.size(), "even-degree pair count mismatch");
    }

    // 4) the alpha correction links, pair sum p3.
    {
      std::vector<std::pair<EdgeId, EdgeId>> links;
      long long a = part.alpha;
      if (a > 0) {
        for (long long r = 1; r <= a / 2; ++r) {
          VertexId y = ys_by_degree[r - 1];
          links.push_back({designated[y][2], designated[y][3]});
        }
        for (long long r = 1; r <= (a + 1) / 2; ++r) {
          VertexId y = ys_by_degree[r - 1];
          links.push_back({designated[y][4], designated[y][5]});
        }
      } else if (a < 0) {
        long long lo34 = c.n_y + (a - (a % 2 != 0 ? 1 : 0)) / 2 + 1;  // n_y + floor(a/2) + 1
        long long lo56 = c.n_y + (a + (a % 2 != 0 ? 1 : 0)) / 2 + 1;  // n_y + ceil(a/2) + 1
        for (long long r = lo34; r <= c.n_y; ++r)
          links.push_back({designated[ys_by_degree[r - 1]][2], designated[ys_by_degree[r - 1]][3]});
        for (long long r = lo56; r <= c.n_y; ++r)
          links.push_back({designated[ys_by_degree[r - 1]][4], designated[ys_by_degree[r - 1]][5]});
      }
      AM_CHECK(static_cast<long long>(links.size()) == std::llabs(a), "alpha link count");
      std::vector<LabelPair> pairs;
      if (a >= 0) {
        for (long long i = 1; i <= a; ++i)
          pairs.push_back({3 * c.n_y_odd + 3 * i - 2, 3 * c.n_y_odd + 3 * (a + 1 - i) - 1});
      } else {
        for (long long u = part.theta + a + 1; u <= part.theta; ++u)
          pairs.push_back({3 * u - 2, 3 * (2 * part.theta + a + 1 - u) - 1});
      }
      for (size_t i = 0; i < links.size(); ++i) {
        LabelPair pr = pairs[i];
        if (pr.lo > pr.hi) std::swap(pr.lo, pr.hi);
        AM_CHECK(pr.sum() == part.p3, "p3 pairing broken");
        assign_link(pr, links[i].first, links[i].second);
      }
    }

    // 5) every remaining E4 edge, paired per vertex with sum p4.
    {
      std::vector<std::pair<EdgeId, EdgeId>> links;
      for (VertexId y : ys_by_degree) {
        std::vector<EdgeId> r1, r2;
        for (EdgeId e : e4_sub.incident(y)) {
          if (labels[e] != 0) continue;
          (rp.residue_of_edge[e] == 1 ? r1 : r2).push_back(e);
        }
        AM_CHECK(r1.size() == r2.size(), "leftover E4 edges unbalanced at a vertex");
        for (size_t i = 0; i < r1.size(); ++i) links.push_back({r1[i], r2[i]});
      }
      AM_CHECK(2 * links.size() == part.j44.size(), "J44 and its links disagree");
      long long lo = part.alpha >= 0 ? c.n_y + part.alpha + 1 : c.n_y + 1;
      long long hi = part.alpha >= 0 ? part.theta : part.theta + part.alpha;
      long long S = lo + hi;
      size_t k = 0;
      for (long long i = lo; i <= hi; ++i) {
        LabelPair pr{3 * i - 2, 3 * (S - i) - 1};
        if (pr.lo > pr.hi) std::swap(pr.lo, pr.hi);
        AM_CHECK(pr.sum() == part.p4, "p4 pairing broken");
        assign_link(pr, links[k].first, links[k].second);
        ++k;
      }
      AM_CHECK(k == links.size(), "J44 assignment incomplete");
    }

    for (EdgeId e : plan.e4)
      AM_CHECK(labels[e] != 0 && labels[e] % 3 == rp.residue_of_edge[e],
               "E4 label departs from the residue plan");
  }

  void step5() {
    if (c.n_y_even == 0) return;
    std::vector<EdgeId> e2_of(g.vertex_count(), -1);
    for (EdgeId e : plan.e2) {
      auto [u, v] = g.edge(e);
      VertexId y = plan.in_x(u) ? v : u;
      e2_of[y] = e;
    }
    long long total = std::accumulate(part.o2.begin(), part.o2.end(), 0LL);
    std::vector<std::pair<VertexId, long long>> base;
    for (VertexId y : plan.y_even) {
      long long s42 = labels[designated[y][0]] + labels[designated[y][1]];
      base.push_back({y, s42});
      total += s42;
    }
    AM_CHECK(total % c.n_y_even == 0, "common E2 target is not integral");
    long long target = total / c.n_y_even;
    std::vector<long long> needed;
    for (auto [y, s42] : base) needed.push_back(target - s42);
    AM_CHECK(sorted(needed) == part.o2, "needed E2 labels are not exactly O2");
    for (auto [y, s42] : base) {
      AM_CHECK(e2_of[y] != -1, "even-degree Y vertex without its E2 edge");
      put(e2_of[y], target - s42);
    }
  }

  void step6() {
    std::vector<std::pair<EdgeId, EdgeId>> links;
    EdgeId leftover = -1;
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
      if (plan.in_x(y) || g.degree(y) == 0) continue;
      std::vector<EdgeId> free;
      for (EdgeId e : g.incident(y))
        if (in_g1[e] && !in_e4[e]) free.push_back(e);
      if (free.size() % 2 == 1) {
        AM_CHECK(!plan.y0.empty() && plan.y0[0] == y, "odd leftover degree away from y0");
        leftover = free.back();
        free.pop_back();
      }
      for (size_t i = 0; i < free.size(); i += 2) links.push_back({free[i], free[i + 1]});
    }
    long long lo = c.n_y + c.n_y_even + 1;
    long long hi = c.l_all.zeros - c.m20;
    long long S = lo + hi;
    size_t k = 0;
    for (long long i = lo; 2 * i < S; ++i) {
      AM_CHECK(k < links.size(), "more O3 pairs than free links");
      put(links[k].first, 3 * i);
      put(links[k].second, 3 * (S - i));
      ++k;
    }
    AM_CHECK(k == links.size(), "free links left unlabeled");
    if ((hi - lo + 1) % 2 == 1) {
      AM_CHECK(S % 2 == 0 && leftover != -1, "middle label without a leftover edge");
      put(leftover, 3 * (S / 2));
    } else {
      AM_CHECK(leftover == -1, "leftover edge without a middle label");
    }
    sigma1 = sums;
  }

  void step7() {
    {
      size_t k = 0;
      for (EdgeId e : plan.e1) put(e, part.o41[k++]);
      AM_CHECK(k == part.o41.size(), "O41 and E1 sizes disagree");
    }
    sigma2 = sums;  // provisional; the switch below may adjust it
    if (plan.y0.empty()) return;
    VertexId yp = plan.y0[0];
    EdgeId me = plan.matched_edge[yp];
    if (me == -1) return;  // y0 in Z: no shared matching edge to worry about
    VertexId xp = g.other_end(me, yp);
    if (sums[yp] != sums[xp]) return;

    if (!in_i2[xp]) {
      // Swap two equal-residue E4 labels at a neighbour of x'.
      EdgeId a = -1;
      for (EdgeId e : e4_sub.incident(xp)) {
        a = e;
        break;
      }
      AM_CHECK(a != -1, "x' outside I2 must hold an E4 edge");
      VertexId ypp = g.other_end(a, xp);
      int mu = static_cast<int>(labels[a] % 3);
      EdgeId b = -1;
      for (EdgeId e : e4_sub.incident(ypp)) {
        if (e != a && labels[e] % 3 == mu) {
          b = e;
          break;
        }
      }
      AM_CHECK(b != -1, "no partner label to swap at y''");
      swap_labels(a, b);
    } else {
      // x' in I2: swap its F2/F3 label with an equal-residue E4 label at y0.
      EdgeId a = -1;
      for (EdgeId e : g.incident(xp)) {
        if (in_f2[e] || in_f3[e]) {
          a = e;
          break;
        }
      }
      AM_CHECK(a != -1, "I2 vertex must carry an F2 or F3 edge");
      VertexId xpp = g.other_end(a, xp);
      int mu = static_cast<int>(labels[a] % 3);
      EdgeId b = -1;
      for (EdgeId e : e4_sub.incident(yp)) {
        VertexId x3 = g.other_end(e, yp);
        if (labels[e] % 3 == mu && x3 != xp && x3 != xpp) {
          b = e;
          break;
        }
      }
      AM_CHECK(b != -1, "no E4 partner label at y0");
      swap_labels(a, b);
    }
    AM_CHECK(sums[yp] != sums[xp], "switch failed to separate y0 from its partner");
    partner_switched = true;
    sigma2 = sums;
  }

  std::vector<VertexId> x_by_sigma2;

  void step8() {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (plan.in_x(v)) x_by_sigma2.push_back(v);
    std::sort(x_by_sigma2.begin(), x_by_sigma2.end(), [&](VertexId a, VertexId b) {
      return sums[a] < sums[b] || (sums[a] == sums[b] && a < b);
    });
    size_t k = 0;
    for (VertexId x : x_by_sigma2) put(plan.matched_edge[x], part.o42[k++]);
    for (size_t i = 0; i + 1 < x_by_sigma2.size(); ++i)
      AM_CHECK(sums[x_by_sigma2[i]] < sums[x_by_sigma2[i + 1]], "X sums must end up increasing");
  }

  void step9() {
    step9_case = 0;
    if (plan.y0.empty()) return;
    VertexId yp = plan.y0[0];

    MatchingState st;
    for (VertexId x : x_by_sigma2) {
      st.sigma2.push_back(sigma2[x]);
      st.labels.push_back(labels[plan.matched_edge[x]]);
    }
    st.y_sigma2 = sigma2[yp];
    if (plan.matched_edge[yp] != -1) {
      VertexId xp = g.other_end(plan.matched_edge[yp], yp);
      st.partner = static_cast<int>(std::find(x_by_sigma2.begin(), x_by_sigma2.end(), xp) -
                                    x_by_sigma2.begin());
    }
    step9_case = resolve_final_collision(st);
    if (step9_case == 0) return;
    for (size_t i = 0; i < x_by_sigma2.size(); ++i)
      relabel(plan.matched_edge[x_by_sigma2[i]], st.labels[i]);
  }

  AssembleResult run() {
    build_zero_sets();
    build_one_two_sets();
    choose_y0();
    pick_designated();
    step1();
    step2();
    step3();
    step4_1();
    step4_3();
    step5();
    step6();
    step7();
    step8();
    step9();

    // Full-label sanity: a bijection onto [m].
    std::vector<long long> all = labels;
    std::sort(all.begin(), all.end());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      AM_CHECK(all[e] == e + 1, "labels are not a bijection onto [m]");
    {
      std::vector<long long> seen;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) seen.push_back(sums[v]);
      std::sort(seen.begin(), seen.end());
      AM_CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
               "vertex sums collide after the final switching");
    }

    AssembleResult out;
    out.labeling = Labeling{labels};
    out.partition = std::move(part);
    out.sigma1 = std::move(sigma1);
    out.step9_case = step9_case;
    out.partner_switched = partner_switched;
    return out;
  }
};

}  // namespace

AssembleResult assemble(const BipartiteGraph& g, DecompositionPlan& plan) {
  Assembler a(g, plan);
  return a.run();
}

int resolve_final_collision(MatchingState& st) {
  const int n = static_cast<int>(st.sigma2.size());
  AM_CHECK(n == static_cast<int>(st.labels.size()), "matching state shape");
  int b = -1;
  for (int i = 0; i < n; ++i)
    if (st.x_sum(i) == st.y_sum()) b = i;
  if (b == -1) return 0;
  const int mu = static_cast<int>(st.y_sum() % 3);
  AM_CHECK(mu == 1 || mu == 2, "the colliding sum must be a {1,2}-sum");
  AM_CHECK(st.partner != b, "the special vertex collides with its own partner");

  auto is_other = [&](int i) { return st.x_sum(i) % 3 == 3 - mu; };
  int up = -1, dn = -1;
  for (int i = b + 1; i < n; ++i)
    if (is_other(i)) {
      up = i;
      break;
    }
  for (int i = b - 1; i >= 0; --i)
    if (is_other(i)) {
      dn = i;
      break;
    }
  AM_CHECK(up != -1 || dn != -1, "X admits only one sum residue");

  auto rotate_left = [&](int lo, int hi) {
    std::rotate(st.labels.begin() + lo, st.labels.begin() + lo + 1, st.labels.begin() + hi + 1);
  };
  auto rotate_right = [&](int lo, int hi) {
    std::rotate(st.labels.begin() + lo, st.labels.begin() + hi, st.labels.begin() + hi + 1);
  };

  int applied;
  if (up != -1 && (dn == -1 || up - b <= b - dn)) {
    int xi = up;
    if (st.partner < b + 1 || st.partner > xi) {
      rotate_left(b, xi);
      applied = 1;
    } else if (st.partner < xi) {
      rotate_left(b + 1, xi);
      applied = 2;
    } else if (dn != -1) {
      rotate_right(dn, b);
      applied = 31;
    } else {
      int beta = b;
      while (beta > 0 && st.sigma2[beta - 1] >= st.y_sigma2) --beta;
      rotate_left(beta, xi);
      applied = 32;
    }
  } else {
    int xi = dn;
    if (st.partner < xi || st.partner > b - 1) {
      rotate_right(xi, b);
      applied = -1;
    } else if (st.partner > xi) {
      rotate_right(xi, b - 1);
      applied = -2;
    } else if (up != -1) {
      rotate_left(b, up);
      applied = -31;
    } else {
      int beta = b;
      while (beta + 1 < n && st.sigma2[beta + 1] <= st.y_sigma2) ++beta;
      rotate_right(xi, beta);
      applied = -32;
    }
  }

  // Separation and pairwise distinctness are the whole point; re-check.
  std::vector<long long> all = {st.y_sum()};
  for (int i = 0; i < n; ++i) all.push_back(st.x_sum(i));
  std::sort(all.begin(), all.end());
  AM_CHECK(std::adjacent_find(all.begin(), all.end()) == all.end(),
           "final switching left a collision");
  return applied;
}

LabelResult label_graph(const BipartiteGraph& g, const LabelOptions& opts) {
  AM_REQUIRE(g.min_degree() >= 15,
             "minimum degree " + std::to_string(g.min_degree()) + " < 15");
  std::string last_error;
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    try {
      DecompositionPlan plan = decompose(g, opts.seed + attempt);
      AssembleResult r = assemble(g, plan);
      if (opts.verify_output) {
        Verdict v = verify(g, r.labeling);
        AM_CHECK(v.antimagic, "self-verification rejected the labeling");
      }
      LabelResult out;
      out.labeling = std::move(r.labeling);
      out.plan = std::move(plan);
      out.partition = std::move(r.partition);
      out.sigma1 = std::move(r.sigma1);
      out.attempts = attempt + 1;
      out.step9_case = r.step9_case;
      out.partner_switched = r.partner_switched;
      return out;
    } catch (const internal_error& e) {
      last_error = e.what();
    }
  }
  throw diagnostic_error("labeling failed after " + std::to_string(opts.max_retries + 1) +
                         " attempts; last error: " + last_error);
}

}  // namespace antimagic
