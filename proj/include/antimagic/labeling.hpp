#pragma once

#include <iosfwd>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Edge labeling; a complete one is a bijection onto [m].
struct Labeling {
  std::vector<long long> label_of_edge;  // size m; 0 = unlabeled

  static Labeling empty(const BipartiteGraph& g) {
    return Labeling{std::vector<long long>(g.edge_count(), 0)};
  }
  std::vector<long long> vertex_sums(const BipartiteGraph& g) const;

  // Text format: one `<u> <v> <label>` line per edge.
  static Labeling read_text(const BipartiteGraph& g, std::istream& in);
  void write_text(const BipartiteGraph& g, std::ostream& out) const;
};

}  // namespace antimagic
