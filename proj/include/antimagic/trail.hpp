#pragma once

#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Edge walk with no repeated edge. vertices.size() == edges.size() + 1 and
// edges[i] joins vertices[i] to vertices[i+1].
struct Trail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  Trail reversed() const;
};

// Kind of an open trail relative to a designated (X, Y) vertex split.
// An X-trail of length two is an X-link.
enum class TrailKind { y_trail, xy_trail, x_trail };

TrailKind classify(const Trail& t, const std::vector<char>& x_side);

// Open trails partitioning an edge set; a good decomposition has exactly
// |V_odd| / 2 of them, one endpoint pair per odd-degree vertex pair.
struct TrailDecomposition {
  std::vector<Trail> trails;

  int trail_count() const { return static_cast<int>(trails.size()); }
  int count_of(TrailKind k, const std::vector<char>& x_side) const;
  std::string debug_dump() const;
};

// Checks that consecutive edges share the stated vertices and that no edge
// repeats across the whole decomposition; throws internal_error otherwise.
void check_decomposition(const BipartiteGraph& g, const EdgeSubset& s,
                         const TrailDecomposition& d);

// Decomposes s into exactly |V_odd|/2 open trails whose endpoints are the
// odd-degree vertices of s. Rejects subsets with an Eulerian component.
TrailDecomposition good_open_trail_decomposition(const BipartiteGraph& g, const EdgeSubset& s);

// While some Y-trail and some X-trail share a vertex, splits and rejoins
// them there so the trail count is preserved and the XY-trail count grows.
// On return every component with odd-degree vertices on both sides owns at
// least one XY-trail.
TrailDecomposition splice_for_xy(const BipartiteGraph& g, TrailDecomposition d,
                                 const std::vector<char>& x_side);

// Reorders trails Y, XY, X and orients Y-/XY-trails to begin on the Y side
// and X-trails on the X side.
TrailDecomposition order_and_orient(TrailDecomposition d, const std::vector<char>& x_side);

}  // namespace antimagic
