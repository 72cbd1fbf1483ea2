#pragma once

#include <cstdint>
#include <vector>

#include "antimagic/decomposition.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// The split of [m]: 0-labels into O1..O4 and {1,2}-labels into J1..J4 (with
// the J4 subdivision), plus the derived pairing targets.
struct LabelPartition {
  std::vector<long long> o1, o2, o3, o41, o42;
  std::vector<long long> j1, j2, j3, j4;
  std::vector<long long> j40, j41, j42, j43, j44;
  long long theta1 = 0, theta2 = 0, theta = 0;
  long long alpha = 0;
  long long p1 = 0, p3 = 0, p4 = 0;
};

struct AssembleResult {
  Labeling labeling;
  LabelPartition partition;
  std::vector<long long> sigma1;  // partial sums before E1 and M get labels
  int step9_case = 0;             // 0 none, +-1, +-2, +-31, +-32
  bool partner_switched = false;  // the pre-matching collision swap fired
};

// Matching-label view for the final switching: position i holds the i-th
// X vertex in increasing order of pre-matching sums, its matching label,
// and the special Y vertex's pre-matching sum plus the position of its own
// matching edge (-1 when it has none).
struct MatchingState {
  std::vector<long long> sigma2;  // ascending
  std::vector<long long> labels;  // ascending 0-labels
  long long y_sigma2 = 0;
  int partner = -1;

  long long x_sum(int i) const { return sigma2[i] + labels[i]; }
  long long y_sum() const { return y_sigma2 + (partner >= 0 ? labels[partner] : 0); }
};

// Rotates matching labels until the special Y sum avoids every X sum while
// the X sums stay pairwise distinct. Returns the applied case: 0 none,
// 1 / 2 / 31 / 32 as in the construction, negated for the mirrored
// direction. Throws internal_error if separation fails.
int resolve_final_collision(MatchingState& st);

// Executes the labeling steps on a finished decomposition; fills the plan's
// y0/e40 fields along the way. Throws internal_error when an identity the
// construction promises fails to hold.
AssembleResult assemble(const BipartiteGraph& g, DecompositionPlan& plan);

struct LabelOptions {
  std::uint64_t seed = 0;
  int max_retries = 8;
  bool verify_output = true;
};

struct LabelResult {
  Labeling labeling;
  DecompositionPlan plan;
  LabelPartition partition;
  std::vector<long long> sigma1;
  int attempts = 1;
  int step9_case = 0;
  bool partner_switched = false;
};

// Full pipeline: decompose, assemble, self-verify; retries with fresh seeds
// on internal errors and surfaces persistent failures.
LabelResult label_graph(const BipartiteGraph& g, const LabelOptions& opts = {});

}  // namespace antimagic
