#pragma once

#include <utility>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/trail.hpp"

namespace antimagic {

struct ComponentSplit {
  std::vector<Component> components;   // ordered by smallest member vertex
  std::vector<VertexId> isolated;      // vertices with zero degree in the subset
};

ComponentSplit connected_components(const BipartiteGraph& g, const EdgeSubset& s);

// Edges of s whose removal increases the component count of the subgraph
// induced by s. Ascending ids.
std::vector<EdgeId> bridges(const BipartiteGraph& g, const EdgeSubset& s);

// Biconnected-component id per edge of s (-1 for non-members). A bridge is
// a block of its own.
std::vector<int> block_ids(const BipartiteGraph& g, const EdgeSubset& s);

// True iff every vertex has even degree within s.
bool is_even_subgraph(const BipartiteGraph& g, const EdgeSubset& s);

// Closed trail using every edge of the connected, all-even component c
// exactly once. Rejects components with an odd-degree vertex.
Trail euler_tour(const BipartiteGraph& g, const Component& c);

// For a vertex v with at least three non-cut incident edges in the connected
// component c, returns two incident edges whose joint removal keeps c
// connected: two from the same block when all non-cut edges share one block,
// otherwise one from each of two distinct blocks.
std::pair<EdgeId, EdgeId> two_removable_edges(const BipartiteGraph& g, const Component& c,
                                              VertexId v);

}  // namespace antimagic
