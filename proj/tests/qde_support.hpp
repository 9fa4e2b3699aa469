#pragma once

#include <random>

#include "gosper_support.hpp"
#include "qsum/qde.hpp"

namespace qsum::testing {

struct QdeParams {
  int m, n, j, lambda;
  long v;
};

inline QdeParams random_qde_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> m(1, 3), n(-2, 2), j(1, 2), lam(1, 3), v(-3, 3);
  return {m(rng), n(rng), j(rng), lam(rng), v(rng)};
}

/// A solvable instance: a/b is the image of a known p under the operator.
inline QdeInstance solvable_instance(std::mt19937_64& rng, const QParam& q, RatFun* known = nullptr) {
  while (true) {
    QdeParams s = random_qde_params(rng);
    Poly num = random_nonzero_poly(rng, 3, s.lambda - 1, 4, 4);
    Poly den = random_chain_poly(rng, q);
    RatFun p(num, den);
    ShiftMonomial sh;
    sh.exps[kX] = s.m;
    sh.exps[kY] = -s.n;
    RatFun rhs = q.pow(-s.v * s.j) * apply_shift(p, sh, q) - p;
    if (rhs.is_zero()) continue;
    if (known) *known = p;
    const Rat lc = rhs.den().leading_coeff();
    return {rhs.num() / lc, rhs.den() / lc, s.m, s.n, s.v, s.j, s.lambda};
  }
}

inline QdeInstance random_instance(std::mt19937_64& rng, const QParam& q) {
  QdeParams s = random_qde_params(rng);
  Poly a = random_nonzero_poly(rng, 3, s.lambda - 1, 3, 4);
  Poly b = random_chain_poly(rng, q);
  return {a, b, s.m, s.n, s.v, s.j, s.lambda};
}

}  // namespace qsum::testing
