#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prp/quadrature.hpp"

namespace prp {

/// Built-in density families for the measure sigma on (0,1] (exchangeable
/// side) and the Levy measure sigma-hat on (0,infinity). The two sides map
/// one-to-one under phi(x) = -log(1-x).
enum class SigmaKind { none, lebesgue, ex_uniform, beta };
enum class LevyKind { none, exp_decay, exp_over_s, beta_levy };

struct SigmaDensity {
  SigmaKind kind = SigmaKind::none;
  double a = 0.0, b = 0.0;  // beta parameters
};

struct LevyDensity {
  LevyKind kind = LevyKind::none;
  double a = 0.0, b = 0.0;
};

double sigma_density(const SigmaDensity& d, double x);
double levy_density(const LevyDensity& d, double s);

/// Permutation-invariant intensity nu = c * sum_i delta_{i} + integral of
/// product measures Pi_x over sigma, plus an optional atom on the full index
/// set (which forces X identically one with the matching probability).
struct ExchangeableNu {
  double c = 0.0;                              // per-singleton mass
  double full_set = 0.0;                       // mass on N itself
  std::vector<std::pair<double, double>> atoms;  // (x in (0,1], mass)
  SigmaDensity density;

  void validate() const;
  /// integral of x over sigma (atoms + density), finite for valid inputs.
  double sigma_x_integral() const;
};

/// Drift gamma, Levy measure, and the defective mass at infinity of the
/// corresponding infinitely divisible law on [0, infinity].
struct LevyTriple {
  double gamma = 0.0;
  double mass_at_infinity = 0.0;  // in [0,1)
  std::vector<std::pair<double, double>> atoms;  // (s in (0,inf), mass)
  LevyDensity density;

  void validate() const;
};

/// gamma = c, sigma-hat = pushforward of sigma under x -> -log(1-x),
/// full-set atom -> mass at infinity.
LevyTriple levy_from_exchangeable(const ExchangeableNu& en);

/// Inverse transform; the density change of variables carries the 1/(1-x)
/// Jacobian, realized here by the closed-form family mapping.
ExchangeableNu exchangeable_from_levy(const LevyTriple& lt);

/// Poisson-process sampler for the de Finetti variable
///   Q = 1 - (1-y0) prod_j (1-Y_j),   y0 = 1 - e^{-c},
/// with (Y_j) drawn from sigma truncated to (trunc_eps, 1].
class DefinettiSampler {
 public:
  DefinettiSampler(const ExchangeableNu& en, double trunc_eps);

  double draw(std::uint64_t seed, std::uint64_t index) const;
  double truncated_density_mass() const { return density_mass_; }

 private:
  ExchangeableNu en_;
  double eps_;
  double density_mass_ = 0.0;       // sigma mass of the density on (eps,1]
  std::vector<double> grid_;        // CDF table support
  std::vector<double> cdf_;         // cumulative sigma mass along grid_
};

/// One draw of Q; convenience wrapper that builds a sampler and draws once.
double sample_definetti_Q(const ExchangeableNu& en, std::uint64_t seed, double trunc_eps);

/// E[e^{-tZ}] = e^{-full_set} e^{t log(1-y0)} exp(integral ((1-y)^t - 1) dsigma)
/// for t > 0, and 1 at t = 0. When `quad_error` is supplied it receives the
/// accumulated quadrature error estimate of the density integral.
double laplace_of_Z(const ExchangeableNu& en, double t, double* quad_error = nullptr);

}  // namespace prp
