#pragma once

#include <cstdint>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

BipartiteGraph complete_bipartite(int a, int b);

// Simple bipartite graph with minimum degree >= delta: overlays of random
// perfect matchings of the smaller side, deduplicated, plus patching of
// deficient vertices, plus independent extra edges with probability `extra`.
// Byte-identical output per (arguments, seed).
BipartiteGraph random_min_degree(int n_a, int n_b, int delta, double extra, std::uint64_t seed);

// All connected bipartite graphs with at most max_edges edges (max_edges <= 7),
// one representative per isomorphism class, in a canonical order.
std::vector<BipartiteGraph> tiny_enumerate(int max_edges);

}  // namespace antimagic
