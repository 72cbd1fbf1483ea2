#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

using VertexId = int;
using EdgeId = int;

// Immutable simple bipartite graph. Side-A vertices are [0, n_a), side-B
// vertices are [n_a, n_a + n_b). Edge ids are dense [0, m) and stable for
// the lifetime of the object.
class BipartiteGraph {
 public:
  BipartiteGraph(int n_a, int n_b, std::vector<std::pair<VertexId, VertexId>> edge_list);

  int side_a_count() const { return n_a_; }
  int side_b_count() const { return n_b_; }
  int vertex_count() const { return n_a_ + n_b_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool on_side_a(VertexId v) const { return v < n_a_; }
  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
  VertexId other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = edges_[e];
    return v == a ? b : a;
  }
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }
  int min_degree() const;

  // Returns the edge joining u and v, or -1.
  EdgeId edge_between(VertexId u, VertexId v) const;

  // Edge-list format: header `bip <n_a> <n_b> <m>`, then one `<u> <v>` line
  // per edge, 0-based ids. Parse failures throw diagnostic_error with a line
  // number.
  static BipartiteGraph read_edge_list(std::istream& in);
  void write_edge_list(std::ostream& out) const;

  std::string to_dot() const;

 private:
  int n_a_;
  int n_b_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Value-type view of a subset of a graph's edges with O(1) membership and
// per-vertex restricted degrees.
class EdgeSubset {
 public:
  explicit EdgeSubset(const BipartiteGraph& g)
      : host_(&g), member_(g.edge_count(), 0), degree_(g.vertex_count(), 0) {}

  static EdgeSubset all_of(const BipartiteGraph& g);
  static EdgeSubset of(const BipartiteGraph& g, std::span<const EdgeId> ids);

  const BipartiteGraph& host() const { return *host_; }
  bool contains(EdgeId e) const { return member_[e] != 0; }
  int degree(VertexId v) const { return degree_[v]; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void insert(EdgeId e);
  void erase(EdgeId e);

  // Ascending member ids.
  std::vector<EdgeId> edge_ids() const;
  // Ascending member ids incident to v.
  std::vector<EdgeId> incident(VertexId v) const;

 private:
  const BipartiteGraph* host_;
  std::vector<char> member_;
  std::vector<int> degree_;
  int size_ = 0;
};

// Connected piece of an edge subset: the edges plus the vertices they touch.
struct Component {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
};

}  // namespace antimagic
