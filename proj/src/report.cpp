#include "antimagic/report.hpp"

#include <algorithm>

namespace antimagic {

StructuralReport structural_report(const BipartiteGraph& g, const Labeling& lab,
                                   const DecompositionPlan& plan, const LabelPartition& part) {
  StructuralReport rep;
  std::vector<long long> sums = lab.vertex_sums(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    if (plan.in_x(v)) {
      if (sums[v] % 3 == 0) ++rep.x_zero_residue;
    } else {
      if (sums[v] % 3 != 0) ++rep.y_nonzero_residue;
    }
  }

  auto audit = [&](const std::vector<EdgeId>& edges, const std::vector<long long>& pool) {
    for (EdgeId e : edges)
      if (!std::binary_search(pool.begin(), pool.end(), lab.label_of_edge[e]))
        ++rep.pool_mismatches;
  };
  std::vector<char> in_e3(g.edge_count(), 0), in_e4(g.edge_count(), 0),
      claimed(g.edge_count(), 0);
  for (EdgeId e : plan.e3) in_e3[e] = 1;
  for (EdgeId e : plan.e4) in_e4[e] = 1;
  for (const auto* s : {&plan.m_edges, &plan.e1, &plan.e2, &plan.e4, &plan.g3, &plan.f2, &plan.f3})
    for (EdgeId e : *s) claimed[e] = 1;
  std::vector<EdgeId> gx_rest, g1_rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (claimed[e]) continue;
    auto [u, v] = g.edge(e);
    if (plan.in_x(u) && plan.in_x(v)) {
      if (!in_e3[e]) gx_rest.push_back(e);
    } else {
      g1_rest.push_back(e);
    }
  }
  audit(gx_rest, part.o1);
  audit(plan.e2, part.o2);
  audit(g1_rest, part.o3);
  audit(plan.e1, part.o41);
  audit(plan.m_edges, part.o42);
  audit(plan.g3, part.j1);
  audit(plan.f2, part.j2);
  audit(plan.f3, part.j3);
  audit(plan.e4, part.j4);
  rep.pools_exact = rep.pool_mismatches == 0;
  return rep;
}

}  // namespace antimagic
