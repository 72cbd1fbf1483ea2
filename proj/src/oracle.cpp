#include "antimagic/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {

struct Search {
  const BipartiteGraph& g;
  std::vector<EdgeId> order;            // edges, decreasing endpoint-degree sum
  std::vector<long long> sum;           // running vertex sums
  std::vector<int> open_edges;          // unassigned incident edges per vertex
  std::vector<char> label_used;
  std::unordered_set<long long> done_sums;

  explicit Search(const BipartiteGraph& graph) : g(graph) {
    order.resize(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    auto weight = [&](EdgeId e) {
      auto [u, v] = g.edge(e);
      return g.degree(u) + g.degree(v);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
    sum.assign(g.vertex_count(), 0);
    open_edges.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) open_edges[v] = g.degree(v);
    label_used.assign(g.edge_count() + 1, 0);
    // Isolated vertices hold a permanent 0 sum.
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 0 && !done_sums.insert(0).second) impossible = true;
  }

  bool impossible = false;

  bool dfs(size_t pos) {
    if (pos == order.size()) return true;
    EdgeId e = order[pos];
    auto [u, v] = g.edge(e);
    for (long long label = 1; label <= g.edge_count(); ++label) {
      if (label_used[label]) continue;
      label_used[label] = 1;
      sum[u] += label;
      sum[v] += label;
      --open_edges[u];
      --open_edges[v];
      bool ok = true;
      int inserted = 0;
      for (VertexId w : {u, v}) {
        if (open_edges[w] != 0) continue;
        if (!done_sums.insert(sum[w]).second) {
          ok = false;
          break;
        }
        ++inserted;
      }
      if (ok && dfs(pos + 1)) return true;
      // Undo, including the completed-sum registrations.
      for (VertexId w : {u, v}) {
        if (open_edges[w] == 0 && inserted > 0) {
          done_sums.erase(sum[w]);
          --inserted;
        }
      }
      ++open_edges[u];
      ++open_edges[v];
      sum[u] -= label;
      sum[v] -= label;
      label_used[label] = 0;
    }
    return false;
  }
};

}  // namespace

bool brute_force_is_antimagic(const BipartiteGraph& g, int max_edges) {
  AM_REQUIRE(g.edge_count() <= max_edges, "brute force cap exceeded");
  if (g.edge_count() == 0) return g.vertex_count() <= 1;
  Search s(g);
  if (s.impossible) return false;
  return s.dfs(0);
}

}  // namespace antimagic
