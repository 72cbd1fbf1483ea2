#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Vertex split X u Y with Y independent and a matching in G[X,Y] saturating
// X, derived from a minimum vertex cover.
struct KonigPartition {
  std::vector<char> x_side;          // per vertex
  std::vector<EdgeId> matching;      // one edge per X vertex, ascending
  std::vector<EdgeId> matched_edge;  // per vertex, -1 if unmatched
};

KonigPartition konig_partition(const BipartiteGraph& g);

// Residue-class census of a label interval.
struct LabelCensus {
  long long zeros = 0, ones = 0, twos = 0;
  long long of(int residue) const { return residue == 0 ? zeros : (residue == 1 ? ones : twos); }
};

// Counts of mu-labels in [1, hi] minus those in [1, lo].
LabelCensus census(long long lo, long long hi);

// All vertex classes and edge sets of the decomposition, with their counts.
struct DecompositionPlan {
  // Vertex classes.
  std::vector<char> x_side;                    // X membership per vertex
  std::vector<VertexId> z;                     // Y vertices unsaturated by M
  std::vector<VertexId> i1;                    // isolated in G[X]
  std::vector<VertexId> i2;                    // isolated in G0
  std::vector<VertexId> i21;                   // isolated in G[I2]
  std::vector<VertexId> y_odd, y_even;         // by degree parity in G
  std::vector<EdgeId> matched_edge;            // per vertex, -1 if none

  // Edge sets (ascending ids).
  std::vector<EdgeId> m_edges, e1, e2, e3, e4, f1, f2, f3, g3;
  std::vector<VertexId> y0;   // empty or the one special Y vertex
  std::vector<EdgeId> e40;    // 0, 1 or 2 edges at y0

  struct Counts {
    long long n_x = 0, n_y = 0, n_y_odd = 0, n_y_even = 0;
    long long m = 0, m1 = 0, m2 = 0;
    long long m11 = 0, m10 = 0, m21 = 0, m20 = 0;
    long long k1 = 0, k2 = 0, k3 = 0;
    long long s1 = 0, s2 = 0;  // odd-/even-size star components of F2
    long long eps1 = 0;
    long long gamma = 0;
    LabelCensus l_all;    // residues over [m]
    LabelCensus l_lower;  // over the first n_y + n_y_even + m1 labels
    LabelCensus l_upper;  // over the rest (the greatest m2 labels)
  } counts;

  bool in_x(VertexId v) const { return x_side[v] != 0; }
};

// Seed flag: steer the covering-edge choices toward starving vertices
// (minimum instead of maximum residual degree). The construction must
// succeed either way; the flag widens structural coverage in tests.
inline constexpr std::uint64_t kStressCoverageSeed = 1ULL << 63;

// Runs the whole vertex partition and edge decomposition. Deterministic per
// seed; the seed perturbs tie-breaking on retries.
DecompositionPlan decompose(const BipartiteGraph& g, std::uint64_t seed);

// Asserts every structural invariant of the plan; throws internal_error on
// the first violation.
void validate_plan(const BipartiteGraph& g, const DecompositionPlan& plan);

// Debug dump: sets as sorted id arrays, counts as integers.
std::string plan_to_json(const DecompositionPlan& plan);

}  // namespace antimagic
