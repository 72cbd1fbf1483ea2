#include "antimagic/pairing.hpp"

#include <algorithm>

namespace antimagic {

namespace {

LabelPair make_pair(long long a, long long b) {
  LabelPair p{std::min(a, b), std::max(a, b)};
  AM_CHECK(p.lo < p.hi && p.sum() % 3 == 0, "malformed zero-sum pair");
  return p;
}

void check_args(long long p, long long k) {
  AM_REQUIRE(k >= 1, "pairing needs k >= 1");
  AM_REQUIRE(p >= 0 && p % 3 == 0, "pairing base must be a 0-label");
}

}  // namespace

std::vector<LabelPair> pair_balanced_run(long long p, long long k) {
  check_args(p, k);
  std::vector<LabelPair> out;
  out.reserve(k);
  if (k % 2 == 1) {
    long long q = (k - 1) / 2;
    for (long long i = 1; i <= q + 1; ++i) out.push_back(make_pair(p + 3 * i - 2, p + 3 * (q + i) - 1));
    for (long long i = 1; i <= q; ++i) out.push_back(make_pair(p + 3 * i - 1, p + 3 * (q + 1 + i) - 2));
  } else {
    long long q = k / 2;
    out.push_back(make_pair(p + 1, p + 2));
    for (long long i = 1; i <= q; ++i) out.push_back(make_pair(p + 3 * (i + 1) - 2, p + 3 * (q + i) - 1));
    for (long long i = 1; i <= q - 1; ++i) out.push_back(make_pair(p + 3 * (i + 1) - 1, p + 3 * (q + 1 + i) - 2));
  }
  return out;
}

std::vector<LabelPair> pair_shifted_run(long long p, long long k) {
  check_args(p, k);
  std::vector<LabelPair> out;
  out.reserve(k);
  if (k % 2 == 1) {
    long long q = (k - 1) / 2;
    for (long long i = 1; i <= q + 1; ++i) out.push_back(make_pair(p + 3 * i - 1, p + 3 * (q + i) + 1));
    for (long long i = 1; i <= q; ++i) out.push_back(make_pair(p + 3 * i + 1, p + 3 * (q + 1 + i) - 1));
  } else {
    long long q = k / 2;
    out.push_back(make_pair(p + 2, p + 4));
    for (long long i = 1; i <= q; ++i) out.push_back(make_pair(p + 3 * (i + 1) - 1, p + 3 * (q + i) + 1));
    for (long long i = 1; i <= q - 1; ++i) out.push_back(make_pair(p + 3 * (i + 1) + 1, p + 3 * (q + 1 + i) - 1));
  }
  return out;
}

}  // namespace antimagic
