#pragma once

#include "antimagic/graph.hpp"

namespace antimagic {

// Exhaustive decision of antimagicness by DFS over label assignments in
// decreasing-degree edge order, pruning on partial-sum collisions among
// completed vertices. Rejects graphs above the edge cap.
bool brute_force_is_antimagic(const BipartiteGraph& g, int max_edges = 9);

}  // namespace antimagic
