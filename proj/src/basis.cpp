#include "wring/basis.hpp"

namespace wring {

std::string to_bitstring(std::uint32_t index, int L) {
  std::string s(L, 'g');
  for (int l = 0; l < L; ++l) {
    if (index & (1u << l)) s[l] = 'r';
  }
  return s;
}

std::uint32_t from_bitstring(const std::string& s, int L) {
  if (L >= 0 && static_cast<int>(s.size()) != L) {
    throw ValidationError("bit-string length " + std::to_string(s.size()) +
                          " does not match L=" + std::to_string(L));
  }
  if (s.empty() || s.size() > 31) {
    throw ValidationError("bit-string length out of range: " + s);
  }
  std::uint32_t index = 0;
  for (std::size_t l = 0; l < s.size(); ++l) {
    const char c = s[l];
    if (c == 'r' || c == '1') {
      index |= (1u << l);
    } else if (c != 'g' && c != '0') {
      throw ValidationError(
          "bit-string alphabet must be {g,r} (or {0,1}), got '" +
          std::string(1, c) + "' in " + s);
    }
  }
  return index;
}

bool no_adjacent_rydberg(std::uint32_t index, int L) {
  for (int l = 0; l < L; ++l) {
    const int next = (l + 1) % L;
    if ((index >> l & 1u) && (index >> next & 1u)) return false;
  }
  return true;
}

void require_odd(int L, const char* what) {
  if (L % 2 == 0) {
    throw ValidationError(std::string(what) +
                          " requires odd L, got L=" + std::to_string(L));
  }
}

std::uint32_t kink_index(int L, int k) {
  require_odd(L, "kink construction");
  if (k < 1 || k > L) {
    throw ValidationError("kink label k must be in 1..L");
  }
  // Defect pair, 0-indexed: sites (k-1, k mod L) are both g; the rest
  // alternates r,g starting with r right after the defect.
  const int after = k % L;
  std::uint32_t index = 0;
  for (int step = 1; step < L - 1; step += 2) {
    index |= 1u << ((after + step) % L);
  }
  return index;
}

std::string kink_string(int L, int k) { return to_bitstring(kink_index(L, k), L); }

std::vector<std::uint32_t> kink_indices(int L) {
  std::vector<std::uint32_t> out;
  out.reserve(L);
  for (int k = 1; k <= L; ++k) out.push_back(kink_index(L, k));
  return out;
}

}  // namespace wring
