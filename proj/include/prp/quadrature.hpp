#pragma once

#include <functional>

namespace prp {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated local error estimate
};

/// Adaptive Simpson on [a,b] to absolute tolerance `tol`.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     int max_depth = 52);

}  // namespace prp
