#include "antimagic/trail.hpp"

#include <algorithm>
#include <sstream>

#include "antimagic/errors.hpp"
#include "antimagic/structure.hpp"

namespace antimagic {

Trail Trail::reversed() const {
  Trail t;
  t.vertices.assign(vertices.rbegin(), vertices.rend());
  t.edges.assign(edges.rbegin(), edges.rend());
  return t;
}

TrailKind classify(const Trail& t, const std::vector<char>& x_side) {
  AM_REQUIRE(!t.closed() && !t.edges.empty(), "classify: need an open trail");
  bool a = x_side[t.front()] != 0;
  bool b = x_side[t.back()] != 0;
  if (a && b) return TrailKind::x_trail;
  if (!a && !b) return TrailKind::y_trail;
  return TrailKind::xy_trail;
}

int TrailDecomposition::count_of(TrailKind k, const std::vector<char>& x_side) const {
  int n = 0;
  for (const Trail& t : trails)
    if (classify(t, x_side) == k) ++n;
  return n;
}

std::string TrailDecomposition::debug_dump() const {
  std::ostringstream os;
  for (const Trail& t : trails) {
    for (size_t i = 0; i < t.vertices.size(); ++i) {
      if (i) os << ' ';
      os << t.vertices[i];
    }
    os << '\n';
  }
  return os.str();
}

void check_decomposition(const BipartiteGraph& g, const EdgeSubset& s,
                         const TrailDecomposition& d) {
  std::vector<char> used(g.edge_count(), 0);
  int covered = 0;
  for (const Trail& t : d.trails) {
    AM_CHECK(t.vertices.size() == t.edges.size() + 1, "trail shape");
    for (size_t i = 0; i < t.edges.size(); ++i) {
      EdgeId e = t.edges[i];
      AM_CHECK(s.contains(e), "trail uses edge outside the subset");
      AM_CHECK(!used[e], "edge repeated across decomposition");
      used[e] = 1;
      ++covered;
      auto [a, b] = g.edge(e);
      VertexId u = t.vertices[i], v = t.vertices[i + 1];
      AM_CHECK((u == a && v == b) || (u == b && v == a), "trail vertices disagree with edge");
    }
  }
  AM_CHECK(covered == s.size(), "decomposition does not cover the subset");
}

TrailDecomposition good_open_trail_decomposition(const BipartiteGraph& g, const EdgeSubset& s) {
  AM_REQUIRE(!s.empty(), "good_open_trail_decomposition: empty subset");
  auto split = connected_components(g, s);
  for (const Component& c : split.components) {
    bool has_odd = false;
    EdgeSubset cs = EdgeSubset::of(g, c.edges);
    for (VertexId v : c.vertices) has_odd |= (cs.degree(v) % 2 != 0);
    AM_REQUIRE(has_odd, "good_open_trail_decomposition: Eulerian component");
  }

  EdgeSubset residual = s;
  std::vector<size_t> cursor(g.vertex_count(), 0);
  auto walk_from = [&](VertexId start) {
    Trail t;
    t.vertices.push_back(start);
    VertexId v = start;
    while (true) {
      const auto& inc = g.incident(v);
      size_t cur = 0;  // residual membership changes as we walk; rescan from cursor
      size_t& c0 = cursor[v];
      while (c0 < inc.size() && !residual.contains(inc[c0])) ++c0;
      cur = c0;
      if (cur >= inc.size()) break;
      EdgeId e = inc[cur];
      residual.erase(e);
      v = g.other_end(e, v);
      t.vertices.push_back(v);
      t.edges.push_back(e);
    }
    return t;
  };

  // Pair odd vertices by maximal walks; each walk starts and ends at a
  // vertex of odd residual degree and flips both to even.
  TrailDecomposition d;
  while (true) {
    VertexId start = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (residual.degree(v) % 2 != 0) {
        start = v;
        break;
      }
    if (start == -1) break;
    Trail t = walk_from(start);
    AM_CHECK(!t.edges.empty() && !t.closed(), "maximal walk from an odd vertex must be open");
    d.trails.push_back(std::move(t));
  }

  // Absorb leftover closed tours into trails passing through their vertices.
  while (!residual.empty()) {
    auto leftover = connected_components(g, residual);
    bool progressed = false;
    for (const Component& c : leftover.components) {
      std::vector<char> in_c(g.vertex_count(), 0);
      for (VertexId v : c.vertices) in_c[v] = 1;
      for (Trail& t : d.trails) {
        auto it = std::find_if(t.vertices.begin(), t.vertices.end(),
                               [&](VertexId v) { return in_c[v] != 0; });
        if (it == t.vertices.end()) continue;
        VertexId w = *it;
        Trail tour = euler_tour(g, c);
        // Rotate the closed tour to start at w and drop the closing repeat;
        // the host trail's own copy of w closes the loop.
        size_t k = std::find(tour.vertices.begin(), tour.vertices.end(), w) -
                   tour.vertices.begin();
        std::rotate(tour.edges.begin(), tour.edges.begin() + k, tour.edges.end());
        tour.vertices.pop_back();
        std::rotate(tour.vertices.begin(), tour.vertices.begin() + k, tour.vertices.end());
        size_t pos = it - t.vertices.begin();
        t.edges.insert(t.edges.begin() + pos, tour.edges.begin(), tour.edges.end());
        t.vertices.insert(t.vertices.begin() + pos, tour.vertices.begin(), tour.vertices.end());
        for (EdgeId e : tour.edges) residual.erase(e);
        progressed = true;
        break;
      }
      if (progressed) break;
    }
    AM_CHECK(progressed, "leftover tour touches no trail (Eulerian component slipped through)");
  }

  check_decomposition(g, s, d);
  return d;
}

namespace {

// Index of an occurrence of u interior-preferred: any position works for the
// exchange; take the first.
size_t find_vertex(const Trail& t, VertexId u) {
  return std::find(t.vertices.begin(), t.vertices.end(), u) - t.vertices.begin();
}

Trail join_at(const Trail& head, size_t head_pos, const Trail& tail, size_t tail_pos) {
  // head[0..head_pos] + tail[tail_pos..end], both meeting at the same vertex.
  Trail t;
  t.vertices.assign(head.vertices.begin(), head.vertices.begin() + head_pos + 1);
  t.edges.assign(head.edges.begin(), head.edges.begin() + head_pos);
  t.vertices.insert(t.vertices.end(), tail.vertices.begin() + tail_pos + 1, tail.vertices.end());
  t.edges.insert(t.edges.end(), tail.edges.begin() + tail_pos, tail.edges.end());
  return t;
}

}  // namespace

TrailDecomposition splice_for_xy(const BipartiteGraph& g, TrailDecomposition d,
                                 const std::vector<char>& x_side) {
  const int r = d.trail_count();
  while (true) {
    // Lowest shared vertex over all (X-trail, Y-trail) pairs, then lowest
    // trail indices.
    int best_x = -1, best_y = -1;
    VertexId best_u = -1;
    std::vector<int> owner_y(g.vertex_count(), -1);
    for (int i = 0; i < d.trail_count(); ++i) {
      if (classify(d.trails[i], x_side) != TrailKind::y_trail) continue;
      for (VertexId v : d.trails[i].vertices)
        if (owner_y[v] == -1) owner_y[v] = i;
    }
    for (int i = 0; i < d.trail_count(); ++i) {
      if (classify(d.trails[i], x_side) != TrailKind::x_trail) continue;
      for (VertexId v : d.trails[i].vertices) {
        if (owner_y[v] != -1 && (best_u == -1 || v < best_u)) {
          best_u = v;
          best_x = i;
          best_y = owner_y[v];
        }
      }
    }
    if (best_u == -1) break;

    const Trail& tx = d.trails[best_x];  // (x1, x2)-trail
    const Trail& ty = d.trails[best_y];  // (y1, y2)-trail
    size_t px = find_vertex(tx, best_u);
    size_t py = find_vertex(ty, best_u);
    // x1..u along tx, then u..y2 along ty; y1..u along ty, then u..x2 along tx.
    Trail t1 = join_at(tx, px, ty, py);
    Trail t2 = join_at(ty, py, tx, px);
    AM_CHECK(classify(t1, x_side) == TrailKind::xy_trail ||
                 classify(t2, x_side) == TrailKind::xy_trail,
             "exchange produced no XY-trail");
    d.trails[best_x] = std::move(t1);
    d.trails[best_y] = std::move(t2);
    AM_CHECK(d.trail_count() == r, "exchange changed the trail count");
  }
  return d;
}

TrailDecomposition order_and_orient(TrailDecomposition d, const std::vector<char>& x_side) {
  for (Trail& t : d.trails) {
    switch (classify(t, x_side)) {
      case TrailKind::xy_trail:
        if (x_side[t.front()]) t = t.reversed();
        break;
      case TrailKind::y_trail:
      case TrailKind::x_trail:
        if (t.back() < t.front()) t = t.reversed();
        break;
    }
  }
  auto rank = [&](const Trail& t) {
    switch (classify(t, x_side)) {
      case TrailKind::y_trail: return 0;
      case TrailKind::xy_trail: return 1;
      case TrailKind::x_trail: return 2;
    }
    return 3;
  };
  std::stable_sort(d.trails.begin(), d.trails.end(), [&](const Trail& a, const Trail& b) {
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    EdgeId ea = *std::min_element(a.edges.begin(), a.edges.end());
    EdgeId eb = *std::min_element(b.edges.begin(), b.edges.end());
    return ea < eb;
  });
  return d;
}

}  // namespace antimagic
