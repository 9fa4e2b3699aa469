#pragma once

#include <utility>
#include <vector>

#include "qsum/ratfun.hpp"

namespace qsum {

/// a / (tau_var^ell d)^j with d monic irreducible, d != var, deg_var(d) >= 1
/// and deg_var(a) < deg_var(d). The coefficients of a are rational functions
/// of the other variable only.
struct FractionTerm {
  Poly d;
  int j = 1;
  int ell = 0;
  RatFun a;
};

/// f == mu + sum c * var^n + sum a / (tau^ell d)^j, where mu and every c are
/// free of var and n != 0. Positive n form the polynomial part, negative n the
/// pure-power fractions c / var^|n|.
struct PFDecomp {
  int var = kY;
  RatFun mu;
  std::vector<std::pair<int, RatFun>> monomials;
  std::vector<FractionTerm> terms;
};

enum class PfdGrouping {
  /// Every term has ell == 0 and its own irreducible d.
  Plain,
  /// Denominators are grouped into <tau_var>-orbits; each term refers to its
  /// orbit representative through ell >= 0.
  ByOrbit,
};

PFDecomp partial_fractions(const RatFun& f, int var, const QParam& q,
                           PfdGrouping grouping = PfdGrouping::Plain);

/// Sums a decomposition back into a single rational function.
RatFun reconstruct(const PFDecomp& pfd, const QParam& q);

}  // namespace qsum
