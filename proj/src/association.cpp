#include "prp/association.hpp"

#include <stdexcept>

namespace prp {

namespace {

constexpr double kSlack = 1e-12;

bool is_monotone(std::uint32_t table, int n) {
  const Mask top = full_mask(n);
  for (Mask c = 0; c <= top; ++c) {
    if (!(table >> c & 1u)) continue;
    // value 1 at c must persist at every superset reached by adding one bit
    for (int b = 0; b < n; ++b) {
      Mask up = c | (Mask{1} << b);
      if (up != c && !(table >> up & 1u)) return false;
    }
  }
  return true;
}

// Best (most extreme, then lexicographically smallest) violating pair over
// all monotone f <= g for the law given by prob over 2^m configs.
AssociationResult worst_pair(const std::vector<double>& prob, int m,
                             const std::vector<std::uint32_t>& tables) {
  AssociationResult r;
  const Mask top = full_mask(m);
  std::vector<double> mean(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    double e = 0.0;
    for (Mask c = 0; c <= top; ++c)
      if (tables[i] >> c & 1u) e += prob[c];
    mean[i] = e;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i; j < tables.size(); ++j) {
      double efg = 0.0;
      const std::uint32_t both = tables[i] & tables[j];
      for (Mask c = 0; c <= top; ++c)
        if (both >> c & 1u) efg += prob[c];
      double gap = mean[i] * mean[j] - efg;
      if (gap > kSlack && (r.pass || gap > r.violation)) {
        r.pass = false;
        r.violation = gap;
        r.f = tables[i];
        r.g = tables[j];
      }
    }
  }
  return r;
}

}  // namespace

std::vector<std::uint32_t> monotone_truth_tables(int n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("monotone function enumeration is exhaustive and limited to n <= 4");
  const int configs = 1 << n;
  std::vector<std::uint32_t> out;
  const std::uint64_t limit = std::uint64_t{1} << configs;
  for (std::uint64_t t = 0; t < limit; ++t)
    if (is_monotone(static_cast<std::uint32_t>(t), n)) out.push_back(static_cast<std::uint32_t>(t));
  return out;
}

AssociationResult check_positive_association(const BinaryDistribution& d) {
  const auto tables = monotone_truth_tables(d.n());
  return worst_pair(d.values(), d.n(), tables);
}

DownwardFkgResult check_downward_fkg(const BinaryDistribution& d) {
  const int n = d.n();
  if (n > 4)
    throw std::invalid_argument("downward FKG check is exhaustive and limited to n <= 4");
  const Mask top = full_mask(n);
  DownwardFkgResult best;
  for (Mask I = 0; I <= top; ++I) {
    const Mask rest = top & ~I;
    const int m = set_size(rest);
    if (m == 0) continue;
    // pack the remaining coordinates
    std::vector<int> sites;
    for (int i = 0; i < n; ++i)
      if (rest & (Mask{1} << i)) sites.push_back(i);
    std::vector<double> cond(std::size_t{1} << m, 0.0);
    double pzero = 0.0;
    for (Mask c = 0; c <= top; ++c) {
      if (c & I) continue;  // needs zeros on I
      Mask packed = 0;
      for (int j = 0; j < m; ++j)
        if (c & (Mask{1} << sites[j])) packed |= Mask{1} << j;
      cond[packed] += d.at(c);
      pzero += d.at(c);
    }
    if (pzero <= 0.0) continue;
    for (double& p : cond) p /= pzero;
    AssociationResult r = worst_pair(cond, m, monotone_truth_tables(m));
    if (!r.pass && (best.pass || r.violation > best.violation)) {
      best.pass = false;
      best.conditioning = I;
      best.f = r.f;
      best.g = r.g;
      best.violation = r.violation;
    }
  }
  return best;
}

}  // namespace prp
