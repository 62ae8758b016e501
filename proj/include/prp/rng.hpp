#pragma once

#include <cmath>
#include <cstdint>

namespace prp::rng {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based PRF: the output is a pure function of (seed, a, b, c), so
/// parallel fills are reproducible regardless of scheduling.
inline std::uint64_t prf(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix(seed ^ 0x8BADF00DDEADBEEFULL);
  h = splitmix(h ^ a);
  h = splitmix(h ^ b);
  h = splitmix(h ^ c);
  return h;
}

inline double to_unit(std::uint64_t u) {
  // 53 high bits -> [0,1)
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

/// Sequential lanes inside one logical cell of the counter space.
struct Stream {
  std::uint64_t seed, a, b;
  std::uint64_t lane = 0;

  std::uint64_t next_u64() { return prf(seed, a, b, lane++); }
  double next_unit() { return to_unit(next_u64()); }

  /// Exponential-race Poisson sampler; stable for any mean (no underflow).
  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    double acc = 0.0;
    int k = -1;
    while (acc <= mean) {
      double u = next_unit();
      acc += -std::log1p(-u);
      ++k;
    }
    return k;
  }
};

}  // namespace prp::rng
