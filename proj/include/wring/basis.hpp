#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wring/common.hpp"

namespace wring {

// Basis conventions, fixed project-wide:
//   * a basis state of L atoms is an index in [0, 2^L); bit l (LSB = site 0)
//     set means atom l is in the Rydberg state |r>, clear means |g>;
//   * the text form is a string over {g, r} with site 0 as the LEFTMOST
//     character; {0, 1} is accepted as an input alias for {g, r};
//   * ring adjacency wraps site L-1 back to site 0.

std::string to_bitstring(std::uint32_t index, int L);

// Accepts {g,r} or {0,1}; throws ValidationError on bad alphabet or when the
// length does not match L (pass L = -1 to accept any length).
std::uint32_t from_bitstring(const std::string& s, int L = -1);

inline int rydberg_count(std::uint32_t index) {
  return popcount64(index);
}

// True when no two ring-adjacent sites are both |r>.
bool no_adjacent_rydberg(std::uint32_t index, int L);

// Kink state |k>_AFM, k in 1..L (L odd): the unique maximum-independent-set
// configuration of the L-cycle whose ferromagnetic g-g defect occupies sites
// (k, k+1), 1-indexed with k = L wrapping to the pair (L, 1). It has exactly
// (L-1)/2 Rydberg atoms and no adjacent r-r pair.
std::uint32_t kink_index(int L, int k);
std::string kink_string(int L, int k);

// Indices of all L kink states, ordered k = 1..L.
std::vector<std::uint32_t> kink_indices(int L);

void require_odd(int L, const char* what);

}  // namespace wring
