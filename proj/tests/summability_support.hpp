#pragma once

#include <random>

#include "qsum/summability.hpp"
#include "test_support.hpp"

namespace qsum::testing {

/// Denominator built from q-shifts of x+y, x^2+y^2, xy+1 and x+1, with total
/// y-degree at most 3.
inline Poly random_shift_denominator(std::mt19937_64& rng, const QParam& q) {
  Poly x = px(), y = py();
  const Poly bases[] = {x + y, x * x + y * y, x * y + 1, x + 1};
  std::uniform_int_distribution<int> pick(0, 3), e(-2, 2), count(1, 3);
  Poly den(1);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    ShiftMonomial s;
    s.exps[kX] = e(rng);
    s.exps[kY] = e(rng);
    Poly f = apply_shift(bases[pick(rng)], s, q);
    if (den.degree(kY) + f.degree(kY) > 3) continue;
    den *= f;
  }
  return den;
}

inline RatFun random_shift_ratfun(std::mt19937_64& rng, const QParam& q) {
  Poly num = random_nonzero_poly(rng, 2, 3, 3, 4);
  return RatFun(num, random_shift_denominator(rng, q));
}

inline RatFun tau_x_difference(const RatFun& g, const QParam& q) {
  return tau(g, kX, 1, q) - g;
}

inline RatFun tau_y_difference(const RatFun& h, const QParam& q) {
  return tau(h, kY, 1, q) - h;
}

}  // namespace qsum::testing
