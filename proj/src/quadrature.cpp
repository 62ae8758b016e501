#include "prp/quadrature.hpp"

#include <cmath>

namespace prp {
namespace {

struct Ctx {
  const std::function<double(double)>& f;
};

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

void adapt(const Ctx& ctx, double a, double b, double fa, double fm, double fb, double whole,
           double tol, int depth, QuadResult& out) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = ctx.f(lm), frm = ctx.f(rm);
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    out.value += left + right + delta / 15.0;
    out.error += std::fabs(delta) / 15.0;
    return;
  }
  adapt(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
  adapt(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     int max_depth) {
  QuadResult out;
  if (a == b) return out;
  Ctx ctx{f};
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = simpson(fa, fm, fb, b - a);
  adapt(ctx, a, b, fa, fm, fb, whole, tol, max_depth, out);
  return out;
}

}  // namespace prp
