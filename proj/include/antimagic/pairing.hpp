#pragma once

#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {

// Two {1,2}-labels whose sum is divisible by three.
struct LabelPair {
  long long lo = 0;
  long long hi = 0;
  long long sum() const { return lo + hi; }
};

// Pairs the 2k labels {p+3i-2, p+3i-1 | i in [1,k]} (the {1,2}-labels in
// (p, p+3k)) into k zero-sum pairs. For odd k the sums are the k consecutive
// 0-sums 2p + 3(k-1)/2 + 3i, i in [1,k]; for even k they are the k-1
// consecutive 0-sums 2p + 3(k/2+1) + 3i, i in [1,k-1], plus 2p+3.
// p must be divisible by three and k >= 1.
std::vector<LabelPair> pair_balanced_run(long long p, long long k);

// Same for the shifted set {p+3i-1, p+3i+1 | i in [1,k]}: odd k gives sums
// 2p + 3(k+1)/2 + 3i; even k gives 2p + 3(k/2+2) + 3i, i in [1,k-1], plus
// 2p+6.
std::vector<LabelPair> pair_shifted_run(long long p, long long k);

}  // namespace antimagic
