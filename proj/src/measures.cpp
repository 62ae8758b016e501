#include "prp/measures.hpp"

#include <cmath>
#include <string>

namespace prp {

namespace {

void require_nonempty_subset(Mask a, Mask full, const char* what) {
  if (a == 0) throw std::domain_error(std::string(what) + ": empty set");
  if ((a & ~full) != 0) throw std::domain_error(std::string(what) + ": set outside ground set");
}

}  // namespace

// --- SubsetMeasure ----------------------------------------------------------

void SubsetMeasure::check_subset(Mask s) const { require_nonempty_subset(s, full(), "atom"); }

void SubsetMeasure::set_mass(Mask s, double mass) {
  check_subset(s);
  if (!(mass >= 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("atom mass must be finite and nonnegative");
  infinite_.erase(s);
  if (mass == 0.0)
    atoms_.erase(s);
  else
    atoms_[s] = mass;
}

void SubsetMeasure::add_mass(Mask s, double mass) {
  check_subset(s);
  if (!(mass >= 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("atom mass must be finite and nonnegative");
  if (mass == 0.0 || infinite_.count(s)) return;
  atoms_[s] += mass;
}

void SubsetMeasure::set_infinite(Mask s) {
  check_subset(s);
  atoms_.erase(s);
  infinite_.insert(s);
}

double SubsetMeasure::mass(Mask s) const {
  auto it = atoms_.find(s);
  return it == atoms_.end() ? 0.0 : it->second;
}

bool SubsetMeasure::is_infinite(Mask s) const { return infinite_.count(s) != 0; }

// --- SignedSubsetMeasure ----------------------------------------------------

void SignedSubsetMeasure::set_mass(Mask s, double mass) {
  require_nonempty_subset(s, full(), "atom");
  if (!std::isfinite(mass)) throw std::invalid_argument("signed atom mass must be finite");
  if (mass == 0.0)
    atoms_.erase(s);
  else
    atoms_[s] = mass;
}

double SignedSubsetMeasure::mass(Mask s) const {
  auto it = atoms_.find(s);
  return it == atoms_.end() ? 0.0 : it->second;
}

std::pair<Mask, double> SignedSubsetMeasure::most_negative() const {
  Mask where = 0;
  double best = 0.0;
  for (const auto& [s, m] : atoms_) {
    if (m < best) {
      best = m;
      where = s;
    }
  }
  return {where, best};
}

// --- ZeroPattern ------------------------------------------------------------

ZeroPattern::ZeroPattern(int n, std::vector<double> z, const Tolerances& tol) : n_(n) {
  check_ground_set(n);
  if (z.size() != (std::size_t{1} << n))
    throw std::invalid_argument("zero pattern must have 2^n entries");
  if (std::fabs(z[0] - 1.0) > tol.eq) throw std::invalid_argument("zero pattern needs z(empty)=1");
  z[0] = 1.0;
  const Mask top = full_mask(n);
  for (Mask I = 1; I <= top; ++I) {
    if (!(z[I] > 0.0)) throw std::invalid_argument("zero pattern must be strictly positive at " +
                                                   format_set(I));
    if (z[I] > 1.0 + tol.eq)
      throw std::invalid_argument("zero pattern exceeds 1 at " + format_set(I));
    for (int b = 0; b < n; ++b) {
      if (I & (Mask{1} << b)) {
        if (z[I] > z[I ^ (Mask{1} << b)] + tol.eq)
          throw std::invalid_argument("zero pattern not monotone at " + format_set(I));
      }
    }
  }
  z_ = std::move(z);
}

ZeroPattern ZeroPattern::unchecked(int n, std::vector<double> z) {
  check_ground_set(n);
  if (z.size() != (std::size_t{1} << n))
    throw std::invalid_argument("zero pattern must have 2^n entries");
  ZeroPattern p;
  p.n_ = n;
  p.z_ = std::move(z);
  return p;
}

// --- BinaryDistribution -----------------------------------------------------

BinaryDistribution::BinaryDistribution(int n, std::vector<double> prob, double sum_tol,
                                       const Tolerances& tol)
    : n_(n) {
  check_ground_set(n);
  if (prob.size() != (std::size_t{1} << n))
    throw std::invalid_argument("distribution must have 2^n entries");
  double sum = 0.0;
  for (double& p : prob) {
    if (p < -tol.nonneg) throw std::invalid_argument("distribution has a negative entry");
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::fabs(sum - 1.0) > sum_tol)
    throw std::invalid_argument("distribution mass is " + std::to_string(sum) + ", not 1");
  prob_ = std::move(prob);
}

// --- queries ----------------------------------------------------------------

ExtReal union_mass(const SubsetMeasure& nu, Mask a) {
  require_nonempty_subset(a, nu.full(), "union_mass");
  ExtReal r;
  for (const auto& [s, m] : nu.atoms())
    if (s & a) r.value += m;
  for (Mask s : nu.infinite_atoms())
    if (s & a) r.infinite = true;
  return r;
}

double union_mass(const SignedSubsetMeasure& nu, Mask a) {
  require_nonempty_subset(a, nu.full(), "union_mass");
  double r = 0.0;
  for (const auto& [s, m] : nu.atoms())
    if (s & a) r += m;
  return r;
}

ExtReal intersection_mass(const SubsetMeasure& nu, Mask a) {
  require_nonempty_subset(a, nu.full(), "intersection_mass");
  ExtReal r;
  for (const auto& [s, m] : nu.atoms())
    if ((s & a) == a) r.value += m;
  for (Mask s : nu.infinite_atoms())
    if ((s & a) == a) r.infinite = true;
  return r;
}

double intersection_mass(const SignedSubsetMeasure& nu, Mask a) {
  require_nonempty_subset(a, nu.full(), "intersection_mass");
  double r = 0.0;
  for (const auto& [s, m] : nu.atoms())
    if ((s & a) == a) r += m;
  return r;
}

// --- forward map ------------------------------------------------------------

namespace {

// Subset-sum (zeta) transform in place: out[B] = sum_{J subset of B} in[J].
void zeta_transform(std::vector<double>& f, int n) {
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    const Mask size = full_mask(n);
    for (Mask s = 0; s <= size; ++s)
      if (s & bit) f[s] += f[s ^ bit];
  }
}

template <class M>
std::vector<double> union_masses_dense(const M& nu) {
  const int n = nu.n();
  std::vector<double> f(std::size_t{1} << n, 0.0);
  for (const auto& [s, m] : nu.atoms()) f[s] = m;
  zeta_transform(f, n);
  // union(A) = total - sum over subsets of the complement
  const Mask top = full_mask(n);
  const double total = f[top];
  std::vector<double> u(f.size(), 0.0);
  for (Mask a = 1; a <= top; ++a) u[a] = total - f[top & ~a];
  return u;
}

}  // namespace

ZeroPattern forward_zero_pattern(const SubsetMeasure& nu) {
  const int n = nu.n();
  const Mask top = full_mask(n);
  if (nu.has_infinite()) {
    // Find the smallest offending query set for the diagnostic.
    for (Mask a = 1; a <= top; ++a) {
      if (union_mass(nu, a).infinite)
        throw std::domain_error("degenerate: almost-surely-one coordinate, union mass of " +
                                format_set(a) + " is infinite");
    }
  }
  std::vector<double> u = union_masses_dense(nu);
  std::vector<double> z(u.size());
  z[0] = 1.0;
  for (Mask a = 1; a <= top; ++a) z[a] = std::exp(-u[a]);
  return ZeroPattern(n, std::move(z));
}

ZeroPattern forward_zero_pattern(const SignedSubsetMeasure& nu) {
  const int n = nu.n();
  const Mask top = full_mask(n);
  std::vector<double> u = union_masses_dense(nu);
  std::vector<double> z(u.size());
  z[0] = 1.0;
  for (Mask a = 1; a <= top; ++a) z[a] = std::exp(-u[a]);
  return ZeroPattern::unchecked(n, std::move(z));
}

BinaryDistribution zero_pattern_to_distribution(const ZeroPattern& z) {
  const int n = z.n();
  const Mask top = full_mask(n);
  std::vector<double> f = z.values();
  // Superset Mobius transform: f[I] <- sum_{K >= I} (-1)^{|K|-|I|} z[K].
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask s = 0; s <= top; ++s)
      if (!(s & bit)) f[s] -= f[s | bit];
  }
  std::vector<double> prob(f.size());
  for (Mask I = 0; I <= top; ++I) {
    double p = f[I];
    if (p < -1e-9) throw std::runtime_error("inconsistent zero pattern: configuration " +
                                            format_set(top & ~I) + " has probability " +
                                            std::to_string(p));
    prob[top & ~I] = p < 0.0 ? 0.0 : p;
  }
  // Roundoff in the butterfly grows with 2^n; scale the mass check with it.
  const double sum_tol = 1e-12 * static_cast<double>(Mask{1} << n);
  return BinaryDistribution(n, std::move(prob), sum_tol);
}

ZeroPattern distribution_to_zero_pattern(const BinaryDistribution& d) {
  const int n = d.n();
  const Mask top = full_mask(n);
  std::vector<double> f = d.values();
  zeta_transform(f, n);  // f[B] = P(ones inside B)
  std::vector<double> z(f.size());
  for (Mask I = 0; I <= top; ++I) {
    z[I] = f[top & ~I];
    if (I != 0 && !(z[I] > 0.0))
      throw std::domain_error("inversion hypothesis violated: P(X(" + format_set(I) +
                              ") = 0) vanishes");
  }
  z[0] = 1.0;
  return ZeroPattern::unchecked(n, std::move(z));
}

// --- algebra ----------------------------------------------------------------

SubsetMeasure superpose(const SubsetMeasure& a, const SubsetMeasure& b) {
  if (a.n() != b.n()) throw std::invalid_argument("superpose: mismatched ground sets");
  SubsetMeasure out = a;
  for (const auto& [s, m] : b.atoms()) out.add_mass(s, m);
  for (Mask s : b.infinite_atoms()) out.set_infinite(s);
  return out;
}

SubsetMeasure restrict_to(const SubsetMeasure& nu, Mask b) {
  require_nonempty_subset(b, nu.full(), "restrict_to");
  SubsetMeasure out(nu.n());
  for (const auto& [s, m] : nu.atoms())
    if (s & b) out.add_mass(s & b, m);
  for (Mask s : nu.infinite_atoms())
    if (s & b) out.set_infinite(s & b);
  return out;
}

SubsetMeasure condition_zero(const SubsetMeasure& nu, Mask b) {
  require_nonempty_subset(b, nu.full(), "condition_zero");
  SubsetMeasure out(nu.n());
  for (const auto& [s, m] : nu.atoms())
    if ((s & ~b) == 0) out.add_mass(s, m);
  for (Mask s : nu.infinite_atoms())
    if ((s & ~b) == 0) out.set_infinite(s);
  return out;
}

BinaryDistribution marginal(const BinaryDistribution& d, Mask b) {
  require_nonempty_subset(b, full_mask(d.n()), "marginal");
  const int m = set_size(b);
  std::vector<int> sites;
  for (int i = 0; i < d.n(); ++i)
    if (b & (Mask{1} << i)) sites.push_back(i);
  std::vector<double> prob(std::size_t{1} << m, 0.0);
  const Mask top = full_mask(d.n());
  for (Mask c = 0; c <= top; ++c) {
    Mask packed = 0;
    for (int j = 0; j < m; ++j)
      if (c & (Mask{1} << sites[j])) packed |= Mask{1} << j;
    prob[packed] += d.at(c);
  }
  return BinaryDistribution(m, std::move(prob), 1e-9);
}

}  // namespace prp
