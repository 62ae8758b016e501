#pragma once

#include <cstdint>
#include <vector>

namespace prp {

/// Li_{1-k} for k >= 1 as an exact rational function N(z)/(1-z)^k, built by
/// the derivative recurrence Li_{j-1}(z) = z * d/dz Li_j(z) from
/// Li_0(z) = z/(1-z). Numerator coefficients are exact integers (Eulerian
/// polynomials); k <= 20 keeps them inside 64 bits.
class PolylogRational {
 public:
  static PolylogRational neg_order(int k);

  int k() const { return k_; }
  const std::vector<std::int64_t>& numerator() const { return num_; }

  double operator()(double z) const;

 private:
  int k_ = 1;
  std::vector<std::int64_t> num_;  // coefficient of z^i at index i
};

struct RootTable {
  int n = 0;
  double r2 = 0.0;        // largest strictly negative root of Li_{1-n}
  double threshold = 0.0; // 1/(1 - r2)
};

/// Bisection for r_2^{(n)} on the bracket (r_2^{(n-1)}, 0), n >= 3.
RootTable root_r2(int n, double tol = 1e-14);

}  // namespace prp
