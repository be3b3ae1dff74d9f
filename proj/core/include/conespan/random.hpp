#pragma once

// Portable seeded randomness. std::mt19937_64 is fully specified by the
// standard; the distributions in <random> are not, so the conversions below
// are spelled out to keep point sets bit-identical across platforms.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace conespan {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1): top 53 bits of one draw, times 2^-53.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Standard normal via Box-Muller; consumes exactly two draws.
inline double standard_normal(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace conespan
