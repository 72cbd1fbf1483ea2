#pragma once

#include <tuple>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

struct Verdict {
  bool is_bijection = false;
  bool sums_distinct = false;
  bool antimagic = false;  // is_bijection && sums_distinct
  std::vector<std::tuple<VertexId, VertexId, long long>> collisions;
  std::vector<int> residue_of_sum;  // per vertex, sum mod 3
};

// Recomputes everything from scratch; trusts nothing from the pipeline.
Verdict verify(const BipartiteGraph& g, const Labeling& lab);

}  // namespace antimagic
