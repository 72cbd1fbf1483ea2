#include "antimagic/structure.hpp"

#include <algorithm>

#include "antimagic/errors.hpp"

namespace antimagic {

ComponentSplit connected_components(const BipartiteGraph& g, const EdgeSubset& s) {
  ComponentSplit out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    if (s.degree(start) == 0) {
      seen[start] = 1;
      out.isolated.push_back(start);
      continue;
    }
    Component c;
    std::vector<VertexId> queue = {start};
    seen[start] = 1;
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      c.vertices.push_back(v);
      for (EdgeId e : g.incident(v)) {
        if (!s.contains(e)) continue;
        c.edges.push_back(e);
        VertexId w = g.other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    out.components.push_back(std::move(c));
  }
  return out;
}

namespace {

// Iterative low-link DFS shared by bridge finding and block labeling.
struct LowLink {
  std::vector<int> disc, low;
  std::vector<EdgeId> bridge_edges;
  std::vector<int> block_of_edge;
  int block_count = 0;

  LowLink(const BipartiteGraph& g, const EdgeSubset& s, bool want_blocks)
      : disc(g.vertex_count(), -1),
        low(g.vertex_count(), 0),
        block_of_edge(g.edge_count(), -1) {
    int timer = 0;
    std::vector<EdgeId> edge_stack;
    struct Frame {
      VertexId v;
      EdgeId in_edge;
      size_t next = 0;
    };
    std::vector<Frame> stack;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      if (disc[root] != -1 || s.degree(root) == 0) continue;
      stack.push_back({root, -1});
      disc[root] = low[root] = timer++;
      while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& inc = g.incident(f.v);
        if (f.next < inc.size()) {
          EdgeId e = inc[f.next++];
          if (!s.contains(e) || e == f.in_edge) continue;
          VertexId w = g.other_end(e, f.v);
          if (disc[w] == -1) {
            if (want_blocks) edge_stack.push_back(e);
            disc[w] = low[w] = timer++;
            stack.push_back({w, e});
          } else if (disc[w] < disc[f.v]) {
            if (want_blocks) edge_stack.push_back(e);
            low[f.v] = std::min(low[f.v], disc[w]);
          }
        } else {
          Frame done = f;
          stack.pop_back();
          if (done.in_edge != -1) {
            VertexId parent = g.other_end(done.in_edge, done.v);
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] > disc[parent]) bridge_edges.push_back(done.in_edge);
            if (want_blocks && low[done.v] >= disc[parent]) {
              int id = block_count++;
              EdgeId e;
              do {
                e = edge_stack.back();
                edge_stack.pop_back();
                block_of_edge[e] = id;
              } while (e != done.in_edge);
            }
          }
        }
      }
      AM_CHECK(edge_stack.empty(), "unclosed block at DFS root");
    }
    std::sort(bridge_edges.begin(), bridge_edges.end());
  }
};

}  // namespace

std::vector<EdgeId> bridges(const BipartiteGraph& g, const EdgeSubset& s) {
  return LowLink(g, s, /*want_blocks=*/false).bridge_edges;
}

std::vector<int> block_ids(const BipartiteGraph& g, const EdgeSubset& s) {
  return LowLink(g, s, /*want_blocks=*/true).block_of_edge;
}

bool is_even_subgraph(const BipartiteGraph& g, const EdgeSubset& s) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (s.degree(v) % 2 != 0) return false;
  return true;
}

Trail euler_tour(const BipartiteGraph& g, const Component& c) {
  AM_REQUIRE(!c.edges.empty(), "euler_tour: empty component");
  EdgeSubset s = EdgeSubset::of(g, c.edges);
  for (VertexId v : c.vertices)
    AM_REQUIRE(s.degree(v) % 2 == 0, "euler_tour: odd-degree vertex");

  std::vector<char> used(g.edge_count(), 0);
  std::vector<size_t> cursor(g.vertex_count(), 0);
  VertexId start = *std::min_element(c.vertices.begin(), c.vertices.end());

  struct Entry {
    VertexId v;
    EdgeId in_edge;
  };
  std::vector<Entry> stack = {{start, -1}};
  Trail tour;
  while (!stack.empty()) {
    VertexId v = stack.back().v;
    const auto& inc = g.incident(v);
    size_t& cur = cursor[v];
    while (cur < inc.size() && (!s.contains(inc[cur]) || used[inc[cur]])) ++cur;
    if (cur < inc.size()) {
      EdgeId e = inc[cur];
      used[e] = 1;
      stack.push_back({g.other_end(e, v), e});
    } else {
      tour.vertices.push_back(v);
      if (stack.back().in_edge != -1) tour.edges.push_back(stack.back().in_edge);
      stack.pop_back();
    }
  }
  std::reverse(tour.vertices.begin(), tour.vertices.end());
  std::reverse(tour.edges.begin(), tour.edges.end());
  AM_CHECK(tour.edges.size() == c.edges.size(), "euler tour missed edges (component not connected?)");
  AM_CHECK(tour.closed(), "euler tour not closed");
  return tour;
}

std::pair<EdgeId, EdgeId> two_removable_edges(const BipartiteGraph& g, const Component& c,
                                              VertexId v) {
  EdgeSubset s = EdgeSubset::of(g, c.edges);
  AM_REQUIRE(s.degree(v) > 0, "two_removable_edges: v not in component");

  std::vector<EdgeId> cut = bridges(g, s);
  std::vector<EdgeId> candidates;
  for (EdgeId e : s.incident(v))
    if (!std::binary_search(cut.begin(), cut.end(), e)) candidates.push_back(e);
  AM_REQUIRE(candidates.size() >= 3, "two_removable_edges: fewer than three non-cut edges at v");

  std::vector<int> blocks = block_ids(g, s);
  EdgeId first = candidates[0];
  EdgeId second = -1;
  for (size_t i = 1; i < candidates.size(); ++i) {
    if (blocks[candidates[i]] != blocks[first]) {
      second = candidates[i];
      break;
    }
  }
  if (second == -1) second = candidates[1];  // all in one block

  EdgeSubset rest = s;
  rest.erase(first);
  rest.erase(second);
  auto split = connected_components(g, rest);
  AM_CHECK(split.components.size() == 1, "two_removable_edges: removal disconnected the component");
  return {first, second};
}

}  // namespace antimagic
