#pragma once

#include <random>
#include <string>

#include "qsum/poly.hpp"
#include "qsum/ratfun.hpp"

namespace qsum::testing {

inline Poly px() { return Poly::var(kX); }
inline Poly py() { return Poly::var(kY); }
inline Rat rat(long n, long d = 1) { return Rat(n, d); }

/// Small random polynomial in x and y with integer coefficients in [-range, range].
inline Poly random_poly(std::mt19937_64& rng, int deg_x, int deg_y, int terms, int range = 5) {
  std::uniform_int_distribution<int> ex(0, deg_x), ey(0, deg_y), c(-range, range);
  Poly out;
  for (int i = 0; i < terms; ++i) {
    Exponents e{};
    e[kX] = ex(rng);
    e[kY] = ey(rng);
    out.add_term(e, Rat(c(rng)));
  }
  return out;
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, int deg_x, int deg_y, int terms, int range = 5) {
  Poly p;
  while (p.is_zero()) p = random_poly(rng, deg_x, deg_y, terms, range);
  return p;
}

}  // namespace qsum::testing
