#pragma once

#include <vector>

namespace qsum {

using IntVector = std::vector<long>;

/// particular + Z-span(basis), or the empty set. The basis is in Hermite
/// normal form (row style: pivots positive, entries above a pivot reduced
/// into [0, pivot)) and the particular point is reduced modulo it, so equal
/// cosets have equal representations.
struct LatticeCoset {
  bool empty = true;
  IntVector particular;
  std::vector<IntVector> basis;

  bool contains(const IntVector& z) const;
  friend bool operator==(const LatticeCoset&, const LatticeCoset&) = default;
};

/// Row-style Hermite normal form of the lattice spanned by `rows`; zero rows
/// are dropped.
std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows, std::size_t ncols);

/// All integer z with rows * z == rhs.
LatticeCoset diophantine_solve(const std::vector<IntVector>& rows, const IntVector& rhs,
                               std::size_t ncols);

}  // namespace qsum
