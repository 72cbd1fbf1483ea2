#pragma once

#include "antimagic/assembler.hpp"
#include "antimagic/decomposition.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

// Diagnostics for pipeline-produced labelings: residue-class goals per side
// plus an audit of which label pool each edge class consumed. Advisory; the
// antimagic verdict comes from verify() alone.
struct StructuralReport {
  long long x_zero_residue = 0;     // X vertices whose sum = 0 (mod 3); goal 0
  long long y_nonzero_residue = 0;  // Y vertices with a {1,2}-sum; goal <= 1
  long long pool_mismatches = 0;    // labels outside their edge class's pool
  bool pools_exact = true;
};

StructuralReport structural_report(const BipartiteGraph& g, const Labeling& lab,
                                   const DecompositionPlan& plan, const LabelPartition& part);

}  // namespace antimagic
