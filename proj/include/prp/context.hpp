#pragma once

#include <stdexcept>

namespace prp {

/// Numeric tolerances shared across the library. Equality checks use `eq`,
/// nonnegativity slack uses `nonneg`.
struct Tolerances {
  double eq = 1e-10;
  double nonneg = 1e-12;
};

/// Thrown when a verdict-style operation concludes "not representable"
/// but the caller asked for a construction that requires representability.
struct not_representable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the precision-escalation loop hits the precision ceiling
/// without two consecutive evaluations agreeing.
struct cancellation_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kPrecisionFloor = 64;
inline constexpr int kPrecisionCeiling = 8192;
inline constexpr int kDefaultPrecision = 256;

}  // namespace prp
