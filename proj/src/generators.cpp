#include "antimagic/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "antimagic/errors.hpp"

namespace antimagic {

BipartiteGraph complete_bipartite(int a, int b) {
  AM_REQUIRE(a >= 1 && b >= 1, "complete_bipartite: sides must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<size_t>(a) * b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return BipartiteGraph(a, b, std::move(edges));
}

BipartiteGraph random_min_degree(int n_a, int n_b, int delta, double extra, std::uint64_t seed) {
  AM_REQUIRE(n_a >= 1 && n_b >= 1, "random_min_degree: sides must be positive");
  AM_REQUIRE(delta >= 0 && delta <= std::min(n_a, n_b), "random_min_degree: infeasible degree floor");
  AM_REQUIRE(extra >= 0.0 && extra <= 1.0, "random_min_degree: extra must be a probability");

  std::mt19937_64 rng(seed);
  const bool a_small = n_a <= n_b;
  const int small = a_small ? n_a : n_b;
  const int large = a_small ? n_b : n_a;

  std::vector<std::vector<char>> adj(n_a, std::vector<char>(n_b, 0));
  std::vector<int> deg_a(n_a, 0), deg_b(n_b, 0);
  auto add = [&](int i, int j) {  // i on side A, j on side B
    if (adj[i][j]) return false;
    adj[i][j] = 1;
    ++deg_a[i];
    ++deg_b[j];
    return true;
  };

  // Matching overlays: each small-side vertex paired with a distinct
  // large-side vertex, delta times.
  std::vector<int> perm(large);
  for (int round = 0; round < delta; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < small; ++i) {
      if (a_small)
        add(i, perm[i]);
      else
        add(perm[i], i);
    }
  }

  // Patch vertices the deduplicated overlays left short.
  auto patch_side = [&](bool side_a) {
    int n = side_a ? n_a : n_b;
    int other = side_a ? n_b : n_a;
    for (int i = 0; i < n; ++i) {
      int& d = side_a ? deg_a[i] : deg_b[i];
      while (d < delta) {
        // Partner with the smallest degree among non-neighbors.
        int best = -1;
        for (int j = 0; j < other; ++j) {
          bool used = side_a ? adj[i][j] : adj[j][i];
          if (used) continue;
          int dj = side_a ? deg_b[j] : deg_a[j];
          if (best == -1 || dj < (side_a ? deg_b[best] : deg_a[best])) best = j;
        }
        AM_CHECK(best != -1, "degree floor infeasible after dedup");
        if (side_a)
          add(i, best);
        else
          add(best, i);
      }
    }
  };
  patch_side(true);
  patch_side(false);

  if (extra > 0.0) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n_a; ++i)
      for (int j = 0; j < n_b; ++j) {
        if (adj[i][j]) continue;
        if (coin(rng) < extra) add(i, j);
      }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n_a; ++i)
    for (int j = 0; j < n_b; ++j)
      if (adj[i][j]) edges.emplace_back(i, n_a + j);
  BipartiteGraph g(n_a, n_b, std::move(edges));
  AM_CHECK(g.min_degree() >= delta, "generated graph misses the degree floor");
  return g;
}

namespace {

// Canonical form of a bipartite graph given as a bitmask over an n_a x n_b
// grid: the minimum mask over all row and column permutations (and the side
// swap when n_a == n_b).
std::uint64_t canonical_mask(int n_a, int n_b, std::uint64_t mask) {
  std::vector<int> rows(n_a), cols(n_b);
  std::uint64_t best = ~0ULL;
  auto eval = [&](bool transpose) {
    std::uint64_t out = 0;
    int bit = 0;
    for (int i = 0; i < n_a; ++i)
      for (int j = 0; j < n_b; ++j, ++bit) {
        int src = transpose ? cols[j] * n_b + rows[i] : rows[i] * n_b + cols[j];
        if (mask >> src & 1) out |= 1ULL << bit;
      }
    best = std::min(best, out);
  };
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      eval(false);
      if (n_a == n_b) eval(true);
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

bool grid_connected_covering(int n_a, int n_b, std::uint64_t mask) {
  std::vector<int> deg(n_a + n_b, 0);
  for (int i = 0; i < n_a; ++i)
    for (int j = 0; j < n_b; ++j)
      if (mask >> (i * n_b + j) & 1) {
        ++deg[i];
        ++deg[n_a + j];
      }
  for (int v = 0; v < n_a + n_b; ++v)
    if (deg[v] == 0) return false;
  std::vector<char> seen(n_a + n_b, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_a + n_b; ++w) {
      bool edge = v < n_a ? (w >= n_a && (mask >> (v * n_b + (w - n_a)) & 1))
                          : (w < n_a && (mask >> (w * n_b + (v - n_a)) & 1));
      if (edge && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

}  // namespace

std::vector<BipartiteGraph> tiny_enumerate(int max_edges) {
  AM_REQUIRE(max_edges >= 1 && max_edges <= 7, "tiny_enumerate: max_edges in [1,7]");
  std::vector<BipartiteGraph> out;
  // A connected graph with m edges spans at most m+1 vertices.
  for (int total = 2; total <= max_edges + 1; ++total) {
    for (int n_a = 1; n_a <= total / 2; ++n_a) {
      int n_b = total - n_a;
      int cells = n_a * n_b;
      std::vector<std::uint64_t> seen;
      for (std::uint64_t mask = 1; mask < (1ULL << cells); ++mask) {
        int m = __builtin_popcountll(mask);
        if (m < total - 1 || m > max_edges) continue;  // too few to connect / too many
        if (!grid_connected_covering(n_a, n_b, mask)) continue;
        std::uint64_t canon = canonical_mask(n_a, n_b, mask);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);
      }
      std::sort(seen.begin(), seen.end());
      for (std::uint64_t mask : seen) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i < n_a; ++i)
          for (int j = 0; j < n_b; ++j)
            if (mask >> (i * n_b + j) & 1) edges.emplace_back(i, n_a + j);
        out.emplace_back(n_a, n_b, std::move(edges));
      }
    }
  }
  return out;
}

}  // namespace antimagic
