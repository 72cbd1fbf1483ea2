#include <doctest.h>

#include <algorithm>

#include "antimagic/assembler.hpp"
#include "antimagic/errors.hpp"

using namespace antimagic;

namespace {

// Pairwise distinctness of the special sum and every X sum, plus label
// conservation.
void check_resolution(MatchingState st, int want_case) {
  std::vector<long long> before = st.labels;
  int got = resolve_final_collision(st);
  CHECK(got == want_case);
  std::vector<long long> after = st.labels;
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  CHECK(before == after);
  std::vector<long long> sums = {st.y_sum()};
  for (size_t i = 0; i < st.labels.size(); ++i) sums.push_back(st.x_sum(i));
  std::sort(sums.begin(), sums.end());
  CHECK(std::adjacent_find(sums.begin(), sums.end()) == sums.end());
}

}  // namespace

TEST_CASE("no collision leaves the labels alone") {
  MatchingState st;
  st.sigma2 = {2, 5, 8};
  st.labels = {30, 33, 36};
  st.y_sigma2 = 1;  // sum 1, alien to {32, 38, 44}
  std::vector<long long> keep = st.labels;
  CHECK(resolve_final_collision(st) == 0);
  CHECK(st.labels == keep);
}

TEST_CASE("upward rotation without a matched edge in range") {
  // Sums (29, 32, 38, 43, 50), collision at position 1, target at 3; the
  // rotated block (30, 33, 36) becomes (33, 36, 30).
  MatchingState st;
  st.sigma2 = {2, 2, 5, 7, 11};
  st.labels = {27, 30, 33, 36, 39};
  st.y_sigma2 = 32;
  st.partner = -1;
  check_resolution(st, 1);
}

TEST_CASE("upward rotation skips the matched position") {
  MatchingState st;
  st.sigma2 = {2, 5, 8, 10};
  st.labels = {30, 33, 36, 39};
  st.y_sigma2 = 2;
  st.partner = 2;  // strictly between the collision and the target
  REQUIRE(st.y_sum() == st.x_sum(1));
  check_resolution(st, 2);
}

TEST_CASE("matched target with an opposite sum below") {
  MatchingState st;
  st.sigma2 = {1, 2, 50, 53, 55};
  st.labels = {30, 33, 36, 39, 42};
  st.y_sigma2 = 44;
  st.partner = 4;
  REQUIRE(st.y_sum() == st.x_sum(2));
  check_resolution(st, 31);
}

TEST_CASE("matched target with single-residue prefix") {
  MatchingState st;
  st.sigma2 = {2, 5, 8, 11, 13};
  st.labels = {30, 33, 36, 39, 42};
  st.y_sigma2 = 2;
  st.partner = 4;
  REQUIRE(st.y_sum() == st.x_sum(2));
  check_resolution(st, 32);
}

TEST_CASE("downward rotation for a low target") {
  MatchingState st;
  st.sigma2 = {1, 2, 5, 8, 11};
  st.labels = {30, 33, 36, 39, 42};
  st.y_sigma2 = 47;  // no matching edge; collides with position 3
  REQUIRE(st.y_sum() == st.x_sum(3));
  check_resolution(st, -1);
}

TEST_CASE("downward rotation skips the matched position") {
  MatchingState st;
  st.sigma2 = {1, 2, 5, 8, 11, 14};
  st.labels = {30, 33, 36, 39, 42, 45};
  st.y_sigma2 = 17;
  st.partner = 2;
  REQUIRE(st.y_sum() == st.x_sum(4));
  check_resolution(st, -2);
}

TEST_CASE("matched low target with an opposite sum above") {
  MatchingState st;
  st.sigma2 = {2, 4, 8, 11, 14, 16};
  st.labels = {30, 33, 36, 39, 42, 45};
  st.y_sigma2 = 11;
  st.partner = 1;
  REQUIRE(st.y_sum() == st.x_sum(2));
  check_resolution(st, -31);
}

TEST_CASE("matched low target with single-residue suffix") {
  MatchingState st;
  st.sigma2 = {1, 2, 5, 8, 11};
  st.labels = {30, 33, 36, 39, 42};
  st.y_sigma2 = 17;
  st.partner = 0;
  REQUIRE(st.y_sum() == st.x_sum(3));
  check_resolution(st, -32);
}

TEST_CASE("randomized collisions always separate") {
  // Generate admissible states: ascending pre-sums with {1,2}-residues and
  // strictly increasing totals, a colliding special sum, optional partner.
  auto mix = [](std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
  };
  int resolved = 0;
  for (std::uint64_t seed = 1; seed <= 4000; ++seed) {
    int n = 4 + static_cast<int>(mix(seed) % 8);
    MatchingState st;
    long long s = 1 + static_cast<long long>(mix(seed * 3) % 4);
    if (s % 3 == 0) s += 1;
    bool saw1 = false, saw2 = false;
    for (int i = 0; i < n; ++i) {
      st.labels.push_back(3 * (10 + i));
      st.sigma2.push_back(s);
      (s % 3 == 1 ? saw1 : saw2) = true;  // labels are 0-labels, sum keeps s's class
      long long bump = 1 + static_cast<long long>(mix(seed * 7 + i) % 5);
      s += bump;
      if (s % 3 == 0) s += 1;
    }
    if (!saw1 || !saw2) continue;  // both residues must appear among X sums
    int b = static_cast<int>(mix(seed * 11) % n);
    int partner = static_cast<int>(mix(seed * 13) % (n + 1)) - 1;
    if (partner == b) partner = -1;
    st.partner = partner;
    long long target = st.x_sum(b);
    st.y_sigma2 = target - (partner >= 0 ? st.labels[partner] : 0);
    if (st.y_sigma2 <= 0) continue;
    if (partner >= 0 && st.y_sigma2 == st.sigma2[partner]) continue;  // step 7 rules this out

    std::vector<long long> before = st.labels;
    int applied = resolve_final_collision(st);
    CHECK(applied != 0);
    std::vector<long long> after = st.labels;
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);
    std::vector<long long> sums = {st.y_sum()};
    for (int i = 0; i < n; ++i) sums.push_back(st.x_sum(i));
    std::sort(sums.begin(), sums.end());
    CHECK(std::adjacent_find(sums.begin(), sums.end()) == sums.end());
    ++resolved;
  }
  CHECK(resolved > 500);
}
