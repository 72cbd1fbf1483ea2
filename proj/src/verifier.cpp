#include "antimagic/verifier.hpp"

#include <algorithm>
#include <numeric>

namespace antimagic {

Verdict verify(const BipartiteGraph& g, const Labeling& lab) {
  Verdict v;
  const int m = g.edge_count();
  if (static_cast<int>(lab.label_of_edge.size()) != m) return v;

  std::vector<char> hit(m + 1, 0);
  v.is_bijection = true;
  for (long long x : lab.label_of_edge) {
    if (x < 1 || x > m || hit[x]) {
      v.is_bijection = false;
      break;
    }
    hit[x] = 1;
  }

  std::vector<long long> sums = lab.vertex_sums(g);
  v.residue_of_sum.resize(sums.size());
  for (size_t i = 0; i < sums.size(); ++i)
    v.residue_of_sum[i] = static_cast<int>(((sums[i] % 3) + 3) % 3);

  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return sums[a] < sums[b] || (sums[a] == sums[b] && a < b); });
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    if (sums[order[i]] == sums[order[i + 1]])
      v.collisions.emplace_back(order[i], order[i + 1], sums[order[i]]);
  }
  v.sums_distinct = v.collisions.empty();
  v.antimagic = v.is_bijection && v.sums_distinct;
  return v;
}

}  // namespace antimagic
