#include "prp/polylog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace prp {

namespace {

constexpr int kMaxOrder = 20;  // numerator coefficients stay below 2^63

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polylog numerator coefficient overflow");
  return r;
}

}  // namespace

PolylogRational PolylogRational::neg_order(int k) {
  if (k < 1) throw std::invalid_argument("neg_order needs k >= 1");
  if (k > kMaxOrder)
    throw std::invalid_argument("neg_order supports k <= " + std::to_string(kMaxOrder) +
                                " (exact 64-bit coefficients)");
  PolylogRational li;
  li.k_ = 1;
  li.num_ = {0, 1};  // Li_0 = z/(1-z)
  while (li.k_ < k) {
    const auto& c = li.num_;
    const int deg = static_cast<int>(c.size()) - 1;
    const int m = li.k_;
    // N_{m+1}(z) = z * [ (1-z) N_m'(z) + m N_m(z) ]
    std::vector<std::int64_t> inner(deg + 2, 0);
    for (int i = 1; i <= deg; ++i) {
      std::int64_t di = checked_mul(c[i], i);
      inner[i - 1] += di;  // N'
      inner[i] -= di;      // -z N'
    }
    for (int i = 0; i <= deg; ++i) inner[i] += checked_mul(c[i], m);
    std::vector<std::int64_t> next(inner.size() + 1, 0);
    for (std::size_t i = 0; i < inner.size(); ++i) next[i + 1] = inner[i];
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    li.num_ = std::move(next);
    ++li.k_;
  }
  return li;
}

double PolylogRational::operator()(double z) const {
  if (z == 1.0) return std::numeric_limits<double>::infinity();
  double num = 0.0;
  for (std::size_t i = num_.size(); i-- > 0;) num = num * z + static_cast<double>(num_[i]);
  return num / std::pow(1.0 - z, k_);
}

RootTable root_r2(int n, double tol) {
  if (n < 3) throw std::invalid_argument("root_r2 needs n >= 3");
  if (!(tol > 0.0)) throw std::invalid_argument("root_r2 needs tol > 0");
  double left = -2.0;  // Li_{-2}(-2) = 2/27 > 0 brackets r_2^{(3)} = -1
  double r2 = 0.0;
  for (int order = 3; order <= n; ++order) {
    PolylogRational li = PolylogRational::neg_order(order);
    if (!(li(left) > 0.0))
      throw std::logic_error("root_r2: bracket sign check failed at the left end (order " +
                             std::to_string(order) + ")");
    // Walk toward 0 until the sign flips; the only root in (left, 0) is r_2.
    double right = 0.5 * left;
    while (!(li(right) < 0.0)) {
      left = right;
      right *= 0.5;
      if (right > -1e-300)
        throw std::logic_error("root_r2: no sign change found approaching zero");
    }
    while (right - left > tol) {
      double mid = 0.5 * (left + right);
      double v = li(mid);
      if (v == 0.0) {
        left = right = mid;
        break;
      }
      (v > 0.0 ? left : right) = mid;
    }
    r2 = 0.5 * (left + right);
    left = r2;  // bracket for the next order, by interlacing
  }
  return {n, r2, 1.0 / (1.0 - r2)};
}

}  // namespace prp
