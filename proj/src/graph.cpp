#include "antimagic/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "antimagic/errors.hpp"

namespace antimagic {

namespace {
std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}
}  // namespace

BipartiteGraph::BipartiteGraph(int n_a, int n_b,
                               std::vector<std::pair<VertexId, VertexId>> edge_list)
    : n_a_(n_a), n_b_(n_b), edges_(std::move(edge_list)) {
  AM_REQUIRE(n_a >= 0 && n_b >= 0, "vertex counts must be nonnegative");
  incidence_.assign(n_a_ + n_b_, {});
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    auto& [u, v] = edges_[e];
    if (!on_side_a(u)) std::swap(u, v);
    AM_REQUIRE(u >= 0 && u < n_a_, "edge endpoint out of side-A range");
    AM_REQUIRE(v >= n_a_ && v < n_a_ + n_b_, "edge endpoint out of side-B range");
    AM_REQUIRE(seen.insert(pair_key(u, v)).second, "parallel edge");
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
  }
}

int BipartiteGraph::min_degree() const {
  int d = edge_count();
  for (VertexId v = 0; v < vertex_count(); ++v) d = std::min(d, degree(v));
  return d;
}

EdgeId BipartiteGraph::edge_between(VertexId u, VertexId v) const {
  const auto& inc = degree(u) <= degree(v) ? incidence_[u] : incidence_[v];
  VertexId base = degree(u) <= degree(v) ? u : v;
  VertexId want = base == u ? v : u;
  for (EdgeId e : inc)
    if (other_end(e, base) == want) return e;
  return -1;
}

BipartiteGraph BipartiteGraph::read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    if (required) {
      throw diagnostic_error("line " + std::to_string(line_no + 1) + ": unexpected end of file");
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> diagnostic_error {
    return diagnostic_error("line " + std::to_string(line_no) + ": " + what);
  };

  next_line(true);
  std::istringstream header(line);
  std::string tag;
  long long n_a = -1, n_b = -1, m = -1;
  if (!(header >> tag >> n_a >> n_b >> m) || tag != "bip")
    throw fail("expected header `bip <n_a> <n_b> <m>`");
  if (n_a < 0 || n_b < 0 || m < 0 || n_a + n_b > (1 << 24) || m > (1LL << 31))
    throw fail("header counts out of range");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    next_line(true);
    std::istringstream row(line);
    long long u, v;
    if (!(row >> u >> v)) throw fail("expected `<u> <v>`");
    if (u < 0 || v < 0 || u >= n_a + n_b || v >= n_a + n_b) throw fail("vertex id out of range");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  try {
    return BipartiteGraph(static_cast<int>(n_a), static_cast<int>(n_b), std::move(edges));
  } catch (const contract_error& e) {
    throw diagnostic_error(std::string("invalid graph: ") + e.what());
  }
}

void BipartiteGraph::write_edge_list(std::ostream& out) const {
  out << "bip " << n_a_ << ' ' << n_b_ << ' ' << edge_count() << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
}

std::string BipartiteGraph::to_dot() const {
  std::ostringstream os;
  os << "graph g {\n  rankdir=LR;\n";
  os << "  subgraph cluster_a { label=\"A\";";
  for (VertexId v = 0; v < n_a_; ++v) os << " a" << v << ";";
  os << " }\n";
  os << "  subgraph cluster_b { label=\"B\";";
  for (VertexId v = n_a_; v < vertex_count(); ++v) os << " b" << (v - n_a_) << ";";
  os << " }\n";
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const auto& [u, v] = edges_[e];
    os << "  a" << u << " -- b" << (v - n_a_) << " [label=" << e << "];\n";
  }
  os << "}\n";
  return os.str();
}

EdgeSubset EdgeSubset::all_of(const BipartiteGraph& g) {
  EdgeSubset s(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) s.insert(e);
  return s;
}

EdgeSubset EdgeSubset::of(const BipartiteGraph& g, std::span<const EdgeId> ids) {
  EdgeSubset s(g);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

void EdgeSubset::insert(EdgeId e) {
  AM_REQUIRE(e >= 0 && e < host_->edge_count(), "edge id out of range");
  if (member_[e]) return;
  member_[e] = 1;
  ++size_;
  auto [u, v] = host_->edge(e);
  ++degree_[u];
  ++degree_[v];
}

void EdgeSubset::erase(EdgeId e) {
  if (!member_[e]) return;
  member_[e] = 0;
  --size_;
  auto [u, v] = host_->edge(e);
  --degree_[u];
  --degree_[v];
}

std::vector<EdgeId> EdgeSubset::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(size_);
  for (EdgeId e = 0; e < static_cast<EdgeId>(member_.size()); ++e)
    if (member_[e]) out.push_back(e);
  return out;
}

std::vector<EdgeId> EdgeSubset::incident(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : host_->incident(v))
    if (member_[e]) out.push_back(e);
  return out;
}

}  // namespace antimagic
