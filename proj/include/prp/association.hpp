#pragma once

#include <cstdint>
#include <vector>

#include "prp/measures.hpp"

namespace prp {

/// All monotone functions {0,1}^n -> {0,1} as truth-table bitmasks
/// (bit c = value at configuration c), ascending. Explicit enumeration,
/// Dedekind-scale: n > 4 is rejected loudly.
std::vector<std::uint32_t> monotone_truth_tables(int n);

struct AssociationResult {
  bool pass = true;
  std::uint32_t f = 0, g = 0;  // witness truth tables on failure
  double violation = 0.0;      // E[f]E[g] - E[fg]
};

/// Positive association over all pairs of monotone indicator functions.
/// Witness: lexicographically smallest (f,g) among the most extreme violations.
AssociationResult check_positive_association(const BinaryDistribution& d);

struct DownwardFkgResult {
  bool pass = true;
  Mask conditioning = 0;       // the zero-set I of the failing conditional law
  std::uint32_t f = 0, g = 0;  // witness tables on the remaining coordinates
  double violation = 0.0;
};

/// Positive association of X | {X(I) == 0} for every I with positive
/// conditioning probability. Witness selection as above, with I in the lex key.
DownwardFkgResult check_downward_fkg(const BinaryDistribution& d);

}  // namespace prp
