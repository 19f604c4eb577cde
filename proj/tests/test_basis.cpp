#include <algorithm>
#include <set>

#include "doctest.h"
#include "wring/basis.hpp"
#include "wring/observables.hpp"

using namespace wring;

namespace {

// Brute-force oracle: all maximum independent sets of the L-cycle by
// exhaustive scan over the 2^L configurations.
std::set<std::uint32_t> max_independent_sets(int L) {
  std::set<std::uint32_t> best;
  int best_size = -1;
  for (std::uint32_t idx = 0; idx < (1u << L); ++idx) {
    if (!no_adjacent_rydberg(idx, L)) continue;
    const int size = rydberg_count(idx);
    if (size > best_size) {
      best_size = size;
      best.clear();
    }
    if (size == best_size) best.insert(idx);
  }
  return best;
}

}  // namespace

TEST_CASE("bit-string text form round trips with both alphabets") {
  CHECK(to_bitstring(0, 3) == "ggg");
  CHECK(to_bitstring(1, 3) == "rgg");  // site 0 is the leftmost character
  CHECK(to_bitstring(4, 3) == "ggr");
  CHECK(from_bitstring("rgg") == 1);
  CHECK(from_bitstring("100") == 1);
  CHECK(from_bitstring("ggr", 3) == 4);
  CHECK_THROWS_AS(from_bitstring("rg", 3), ValidationError);
  CHECK_THROWS_AS(from_bitstring("rgx"), ValidationError);
  for (std::uint32_t idx = 0; idx < 32; ++idx) {
    CHECK(from_bitstring(to_bitstring(idx, 5)) == idx);
  }
}

TEST_CASE("kink strings enumerate the maximum independent sets of the cycle") {
  for (int L : {3, 5, 7, 9, 11, 13}) {
    const auto oracle = max_independent_sets(L);
    const auto kinks = kink_indices(L);
    CHECK(kinks.size() == std::size_t(L));
    CHECK(oracle.size() == std::size_t(L));
    CHECK(std::set<std::uint32_t>(kinks.begin(), kinks.end()) == oracle);
  }
}

TEST_CASE("every kink string has (L-1)/2 Rydberg atoms and a single g-g defect") {
  for (int L : {3, 5, 7, 9, 11, 13}) {
    for (int k = 1; k <= L; ++k) {
      const auto idx = kink_index(L, k);
      CHECK(rydberg_count(idx) == (L - 1) / 2);
      CHECK(no_adjacent_rydberg(idx, L));
      // exactly one ring-adjacent equal pair, and it is g-g at (k, k+1)
      int equal_pairs = 0;
      for (int l = 0; l < L; ++l) {
        const int next = (l + 1) % L;
        const bool bl = idx >> l & 1u, bn = idx >> next & 1u;
        if (bl == bn) {
          ++equal_pairs;
          CHECK_FALSE(bl);           // the defect is g-g
          CHECK(l == k - 1);         // anchored at sites (k, k+1), 1-indexed
          CHECK(next == k % L);      // k = L wraps to the pair (L, 1)
        }
      }
      CHECK(equal_pairs == 1);
    }
  }
}

TEST_CASE("kink labels for the triangle") {
  CHECK(kink_string(3, 1) == "ggr");
  CHECK(kink_string(3, 2) == "rgg");
  CHECK(kink_string(3, 3) == "grg");
}

TEST_CASE("kink construction rejects even L and bad labels") {
  CHECK_THROWS_AS(kink_index(4, 1), ValidationError);
  CHECK_THROWS_AS(kink_index(5, 0), ValidationError);
  CHECK_THROWS_AS(kink_index(5, 6), ValidationError);
  CHECK_THROWS_AS(kink_superposition(6), ValidationError);
}

TEST_CASE("kink superposition is normalized with uniform overlaps") {
  for (int L : {3, 5, 7}) {
    const auto ks = kink_superposition(L);
    CHECK(ks.psi().norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= L; ++k) {
      CHECK(std::abs(ks.psi()[kink_index(L, k)]) ==
            doctest::Approx(1.0 / std::sqrt(double(L))).epsilon(1e-12));
    }
  }
}

TEST_CASE("the L=3 kink superposition is the three-site W state") {
  const auto ks = kink_superposition(3);
  const double amp = 1.0 / std::sqrt(3.0);
  for (std::uint32_t idx = 0; idx < 8; ++idx) {
    if (idx == 1 || idx == 2 || idx == 4) {
      CHECK(std::abs(ks.psi()[idx] - amp) < 1e-12);
    } else {
      CHECK(std::abs(ks.psi()[idx]) == 0.0);
    }
  }
}
