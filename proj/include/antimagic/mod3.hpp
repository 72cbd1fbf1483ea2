#pragma once

#include <optional>
#include <span>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Residue-class assignment (1 or 2 mod 3) for every edge of a subset,
// together with per-vertex class counts.
struct ResiduePlan {
  std::vector<int> residue_of_edge;  // size m; 0 outside the subset
  std::vector<int> ones_at;          // per-vertex count of residue-1 edges
  std::vector<int> twos_at;
  int ones_total = 0;
  int twos_total = 0;

  int partial_sum_residue(VertexId v) const { return (ones_at[v] + 2 * twos_at[v]) % 3; }
};

// Assigns residues 1/2 to the edges of s, consuming exactly `ones`
// residue-1 slots and `twos` residue-2 slots, such that
//   (i)  every covered X-side vertex gets a partial-sum residue in {1,2};
//   (ii) Y-side class counts are balanced: exactly equal everywhere but at
//        most one vertex (off by two) when all Y-side degrees are even,
//        and off by at most one everywhere otherwise.
// Requires: s nonempty, no Eulerian component, |ones - twos| <= 2,
// ones + twos = |s|, and either all Y-side degrees even or some component
// with odd-degree vertices on both sides.
ResiduePlan assign_residues(const BipartiteGraph& g, const EdgeSubset& s,
                            const std::vector<char>& x_side, long long ones, long long twos);

// Sorted concrete labels split by residue class.
struct ResiduePool {
  std::vector<long long> ones;  // ascending, all = 1 (mod 3)
  std::vector<long long> twos;  // ascending, all = 2 (mod 3)

  static ResiduePool from_labels(std::span<const long long> labels);
  long long take_greatest(int residue);
  long long take_least(int residue);
  bool exhausted() const { return ones.empty() && twos.empty(); }
};

// Turns a residue plan into concrete labels: `reserved` edges receive the
// greatest available labels of their class, the rest ascending labels in
// ascending edge-id order. Returns one label per edge (0 = unlabeled).
std::vector<long long> materialize(const BipartiteGraph& g, const EdgeSubset& s,
                                   const ResiduePlan& plan, ResiduePool pool,
                                   const EdgeSubset& reserved);

// The two label swaps (each swapping the labels of two edges meeting at a
// Y-side vertex) that create a vertex-sum of the missing residue class.
struct BothResidueSwitch {
  std::array<std::pair<EdgeId, EdgeId>, 2> swaps;
};

// Decides whether the partial sums of covered X-side vertices plus the
// designated pendant set W already realize both residues 1 and 2; if not,
// returns the switch that fixes it while preserving guarantees (i)/(ii).
// Requires the hypotheses: at most one non-pendant odd-degree Y-side vertex,
// |Y2 u Y3| >= |V|/2, and minimum degree four on Y2 u Y3.
std::optional<BothResidueSwitch> plan_both_residue_switch(const BipartiteGraph& g,
                                                          const EdgeSubset& s,
                                                          const std::vector<char>& x_side,
                                                          const ResiduePlan& plan,
                                                          const std::vector<char>& pendant_w);

void apply_switch_to_plan(const BipartiteGraph& g, ResiduePlan& plan,
                          const BothResidueSwitch& sw);

// Concrete-label variant: swaps label values so that X u W admits at least
// one vertex sum of each residue class. `labels` holds one label per edge
// (0 outside s).
std::vector<long long> ensure_both_residues(const BipartiteGraph& g, const EdgeSubset& s,
                                            const std::vector<char>& x_side,
                                            std::vector<long long> labels,
                                            const std::vector<char>& pendant_w);

}  // namespace antimagic
