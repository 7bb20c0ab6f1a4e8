#pragma once

#include <cstdint>

namespace apn::kernels::detail {

// Bit j of the result is bit (j ^ s) of x, for s < 64.
inline std::uint64_t permute_word(std::uint64_t x, unsigned s) {
  constexpr std::uint64_t kMasks[6] = {0x5555555555555555ULL, 0x3333333333333333ULL,
                                       0x0F0F0F0F0F0F0F0FULL, 0x00FF00FF00FF00FFULL,
                                       0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (unsigned j = 0; j < 6; ++j) {
    if ((s >> j) & 1U) {
      const unsigned w = 1U << j;
      x = ((x & kMasks[j]) << w) | ((x >> w) & kMasks[j]);
    }
  }
  return x;
}

}  // namespace apn::kernels::detail
