#include "antimagic/labeling.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {

std::vector<long long> Labeling::vertex_sums(const BipartiteGraph& g) const {
  std::vector<long long> sums(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    sums[u] += label_of_edge[e];
    sums[v] += label_of_edge[e];
  }
  return sums;
}

Labeling Labeling::read_text(const BipartiteGraph& g, std::istream& in) {
  Labeling lab = Labeling::empty(g);
  std::vector<char> seen(g.edge_count(), 0);
  std::string line;
  int line_no = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream row(line);
    long long u, v, label;
    if (!(row >> u >> v >> label))
      throw diagnostic_error("line " + std::to_string(line_no) + ": expected `<u> <v> <label>`");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
      throw diagnostic_error("line " + std::to_string(line_no) + ": vertex id out of range");
    EdgeId e = g.edge_between(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (e < 0)
      throw diagnostic_error("line " + std::to_string(line_no) + ": no such edge");
    if (seen[e])
      throw diagnostic_error("line " + std::to_string(line_no) + ": edge labeled twice");
    seen[e] = 1;
    lab.label_of_edge[e] = label;
    ++rows;
  }
  if (rows != g.edge_count())
    throw diagnostic_error("labeling covers " + std::to_string(rows) + " of " +
                           std::to_string(g.edge_count()) + " edges");
  return lab;
}

void Labeling::write_text(const BipartiteGraph& g, std::ostream& out) const {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    out << u << ' ' << v << ' ' << label_of_edge[e] << '\n';
  }
}

}  // namespace antimagic
