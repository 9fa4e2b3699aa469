#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qsum/qgosper.hpp"
#include "qsum/ratfun.hpp"

namespace qsum {

/// a/b == q^{-v j} tau_x^m tau_y^{-n} p - p for p in Q(x)[y] with deg_y p < lambda.
struct QdeInstance {
  Poly a;
  Poly b;
  int m = 1;
  int n = 0;
  long v = 0;
  int j = 1;
  int lambda = 1;
};

/// Laurent polynomial in x, ordinary in y: (x-exponent, y-exponent) -> coefficient.
struct LaurentXY {
  std::map<std::pair<int, int>, Rat> terms;
  RatFun to_ratfun() const;
};

struct DegreeWindow {
  long low = 0;
  long high = -1;
  bool empty() const { return low > high; }
};

/// (B(x q^{-m}), b(x) C(x)): every solution is p = first * p_hat / second with
/// p_hat Laurent in x.
std::pair<Poly, Poly> universal_denominator(const Poly& b, int m, const QParam& q);

/// Range of x-exponents any Laurent solution p_hat can use.
DegreeWindow degree_bounds(const QdeInstance& inst, const GosperTriple& triple);

/// Solves for p_hat inside the degree window widened by `widen` on each side.
std::optional<LaurentXY> solve_laurent(const QdeInstance& inst, const QParam& q, int widen = 0);

std::optional<RatFun> solve_qde(const QdeInstance& inst, const QParam& q, int widen = 0);

/// Exact check of the equation for a candidate p.
bool satisfies_qde(const QdeInstance& inst, const RatFun& p, const QParam& q);

}  // namespace qsum
