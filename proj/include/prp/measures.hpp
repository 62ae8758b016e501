#pragma once

#include <map>
#include <set>
#include <vector>

#include "prp/bits.hpp"
#include "prp/context.hpp"

namespace prp {

/// Extended real for set masses: `infinite` is an explicit flag so the
/// finite arithmetic stays total.
struct ExtReal {
  double value = 0.0;
  bool infinite = false;
};

/// Nonnegative measure on the nonempty subsets of [n]; the intensity of the
/// Poisson set process. Atoms with infinite mass are tracked separately.
class SubsetMeasure {
 public:
  explicit SubsetMeasure(int n) : n_(n) { check_ground_set(n); }

  int n() const { return n_; }
  Mask full() const { return full_mask(n_); }

  void set_mass(Mask s, double mass);
  void add_mass(Mask s, double mass);
  void set_infinite(Mask s);

  /// Finite mass stored at s (0 if absent). Infinite atoms are not reported here.
  double mass(Mask s) const;
  bool is_infinite(Mask s) const;

  const std::map<Mask, double>& atoms() const { return atoms_; }
  const std::set<Mask>& infinite_atoms() const { return infinite_; }
  bool has_infinite() const { return !infinite_.empty(); }

 private:
  void check_subset(Mask s) const;

  int n_;
  std::map<Mask, double> atoms_;
  std::set<Mask> infinite_;
};

/// Signed measure on the nonempty subsets of [n]; the output of Mobius
/// inversion. Masses are arbitrary finite reals.
class SignedSubsetMeasure {
 public:
  explicit SignedSubsetMeasure(int n) : n_(n) { check_ground_set(n); }

  int n() const { return n_; }
  Mask full() const { return full_mask(n_); }

  void set_mass(Mask s, double mass);
  double mass(Mask s) const;
  const std::map<Mask, double>& atoms() const { return atoms_; }

  /// Most negative atom; ties resolved toward the smallest mask.
  std::pair<Mask, double> most_negative() const;

 private:
  int n_;
  std::map<Mask, double> atoms_;
};

/// The map I -> P(X(I) == 0) over all subsets of [n], indexed by bitmask.
/// Checked patterns are positive, monotone decreasing in I, and have z(0)=1.
class ZeroPattern {
 public:
  ZeroPattern(int n, std::vector<double> z, const Tolerances& tol = {});

  /// Skips validation; used for signed forward maps whose "pattern" may
  /// exceed 1 or lose monotonicity.
  static ZeroPattern unchecked(int n, std::vector<double> z);

  int n() const { return n_; }
  double at(Mask I) const { return z_[I]; }
  const std::vector<double>& values() const { return z_; }

 private:
  ZeroPattern() = default;
  int n_ = 0;
  std::vector<double> z_;
};

/// Explicit law of X on {0,1}^n; config index has site i at bit i-1.
class BinaryDistribution {
 public:
  BinaryDistribution(int n, std::vector<double> prob, double sum_tol = 1e-12,
                     const Tolerances& tol = {});

  int n() const { return n_; }
  double at(Mask config) const { return prob_[config]; }
  const std::vector<double>& values() const { return prob_; }

 private:
  int n_;
  std::vector<double> prob_;
};

// --- Measure queries -------------------------------------------------------

/// Mass of S_A-union = { J : J meets A }.
ExtReal union_mass(const SubsetMeasure& nu, Mask a);
double union_mass(const SignedSubsetMeasure& nu, Mask a);

/// Mass of S_A-intersection = { J : J contains A }.
ExtReal intersection_mass(const SubsetMeasure& nu, Mask a);
double intersection_mass(const SignedSubsetMeasure& nu, Mask a);

// --- Forward map and its inverses ------------------------------------------

/// z(I) = exp(-nu(S_I-union)). Throws if some coordinate is almost surely
/// one (infinite union mass), naming the offending set.
ZeroPattern forward_zero_pattern(const SubsetMeasure& nu);

/// Same formula with signed masses allowed; result is unchecked.
ZeroPattern forward_zero_pattern(const SignedSubsetMeasure& nu);

/// Inclusion-exclusion: P(X zero exactly on I) = sum_{K >= I} (-1)^{|K|-|I|} z(K).
BinaryDistribution zero_pattern_to_distribution(const ZeroPattern& z);

/// Marginal zero probabilities of an explicit law. Throws if some z(I)=0.
ZeroPattern distribution_to_zero_pattern(const BinaryDistribution& d);

// --- Measure algebra --------------------------------------------------------

/// Entrywise sum; the law of the independent max of the two processes.
SubsetMeasure superpose(const SubsetMeasure& a, const SubsetMeasure& b);

/// Pushforward under A -> A & B, dropping mass sent to the empty set;
/// represents the marginal of X on B.
SubsetMeasure restrict_to(const SubsetMeasure& nu, Mask b);

/// Restriction to atoms inside B; represents X | { X(B complement) == 0 }.
SubsetMeasure condition_zero(const SubsetMeasure& nu, Mask b);

/// Marginal law on the coordinates of B, reindexed compactly onto [|B|].
BinaryDistribution marginal(const BinaryDistribution& d, Mask b);

}  // namespace prp
