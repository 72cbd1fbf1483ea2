#pragma once

// Structured instances for the labeling pipeline. A two-block graph forces
// a mixed cover (part side A, part side B), so cover-internal edges, the
// even subgraph, and the star forests all come alive; optional gadgets pin
// down specific corners:
//   - solo gadgets: side-A vertices whose only cross-cover neighbour is
//     their matching partner, so they are forced into the isolated class
//     (one F3 edge each);
//   - an F2 star: two such leaves joined through a side-B vertex that the
//     coverage stress mode also starves, giving a two-edge star;
//   - a starved hub: a vertex whose covering edges the stress mode piles
//     up until the alternating-path switching has to free it.

#include <utility>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic::testing {

struct TwoBlockOptions {
  int solo_gadgets = 0;
  int f2_star_leaves = 0;    // 0 off; 1 = odd-size star; 2 = even-size star
  bool starved_hub = false;
  int sprinkles_per_a1 = 4;  // cover-internal edges feeding G3
  int tuning = 0;            // extra cover-internal edges, shifts |E| mod 3
};

struct TwoBlockGraph {
  BipartiteGraph graph;
  VertexId hub = -1;                 // the starved hub, if present
  std::vector<VertexId> forced_i2;   // gadget vertices that must land in I2
};

inline TwoBlockGraph two_block_graph(const TwoBlockOptions& opt) {
  // Side A: A0 (20) then A1 (15) then gadget vertices.
  // Side B: B0 (15) then B1 (20) then gadget vertices.
  const int a0 = 20, a1 = 15, b0 = 15, b1 = 20;
  int n_a = a0 + a1 + opt.solo_gadgets + opt.f2_star_leaves + (opt.starved_hub ? 1 : 0);
  int n_b = b0 + b1 + (opt.f2_star_leaves > 0 ? 1 : 0) + (opt.starved_hub ? 15 : 0);

  auto A0 = [&](int i) { return i; };
  auto A1 = [&](int i) { return a0 + i; };
  int next_a = a0 + a1;
  auto B0 = [&](int i) { return n_a + i; };
  auto B1 = [&](int i) { return n_a + b0 + i; };
  int next_b = b0 + b1;

  std::vector<std::pair<VertexId, VertexId>> edges;
  auto add = [&](VertexId u, VertexId v) { edges.emplace_back(u, v); };

  for (int i = 0; i < a0; ++i)
    for (int j = 0; j < b0; ++j) add(A0(i), B0(j));
  for (int i = 0; i < a1; ++i)
    for (int j = 0; j < b1; ++j) add(A1(i), B1(j));
  for (int i = 0; i < a1; ++i)
    for (int j = 0; j < opt.sprinkles_per_a1; ++j) add(A1(i), B0((i + j) % b0));
  for (int k = 0; k < opt.tuning; ++k)
    add(A1(k % a1), B0((k % a1 + opt.sprinkles_per_a1 + 1 + k / a1) % b0));

  TwoBlockGraph out{BipartiteGraph(0, 0, {}), -1, {}};

  int used_b1 = 0;  // B1 vertices 15..19 start out unmatched; hand them to gadgets
  for (int gdx = 0; gdx < opt.solo_gadgets; ++gdx) {
    VertexId u = next_a++;
    add(u, B1(15 + used_b1++));
    for (int j = 0; j < 14; ++j) add(u, B0((3 * gdx + j) % b0));
    out.forced_i2.push_back(u);
  }
  if (opt.f2_star_leaves > 0) {
    VertexId w = n_a + next_b++;
    for (int leaf = 0; leaf < opt.f2_star_leaves; ++leaf) {
      VertexId u = next_a++;
      add(u, B1(15 + used_b1++));
      for (int j = 0; j < 13; ++j) add(u, B0((j + 5 * leaf) % b0));
      add(u, w);
      out.forced_i2.push_back(u);
    }
    // w: matching partner A0#15 (unmatched in the blocks), covering target
    // A0#0, and cover-side fills up to degree 15.
    add(A0(15), w);
    add(A0(0), w);
    for (int j = 0; j < 13 - opt.f2_star_leaves; ++j) add(A1(j), w);
    out.forced_i2.push_back(w);
  }
  if (opt.starved_hub) {
    VertexId hub = next_a++;
    out.hub = hub;
    for (int t = 0; t < 15; ++t) {
      VertexId bt = n_a + next_b++;
      add(hub, bt);
      for (int j = 0; j < 15; ++j) add(A1(j), bt);
    }
  }

  out.graph = BipartiteGraph(n_a, n_b, std::move(edges));
  return out;
}

}  // namespace antimagic::testing
