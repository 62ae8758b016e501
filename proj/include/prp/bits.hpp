#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace prp {

/// Subsets of [n] as bitmasks: site i (1-based) lives in bit i-1.
/// The general exhaustive paths are bounded to n <= 24.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 24;

inline Mask full_mask(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline int set_size(Mask s) { return std::popcount(s); }

inline void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet)
    throw std::invalid_argument("ground-set size must be in [1, " +
                                std::to_string(kMaxGroundSet) + "], got " + std::to_string(n));
}

/// "{1,3,4}" rendering of a subset, 1-based.
inline std::string format_set(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace prp
