#pragma once

#include <vector>

#include "qsum/poly.hpp"

namespace qsum {

/// num(x)/den(x) == (A(x)/B(x)) * (C(x q^m)/C(x)) with
/// gcd(A(x), B(x q^{hm})) == 1 for every h >= 0. B and C are monic.
struct GosperTriple {
  Poly A;
  Poly B;
  Poly C;
  int m = 1;
};

/// Every h >= 0 with deg gcd(f(x), g(x q^{hm})) > 0, ascending. Throws
/// std::domain_error when f and g both vanish at 0, because then every h
/// qualifies.
std::vector<long> shift_gcd_spectrum(const Poly& f, const Poly& g, int m, const QParam& q);

GosperTriple gosper_representation(const Poly& num, const Poly& den, int m, const QParam& q);

/// Representation of b(x)/b(x q^m).
GosperTriple m_fold_gosper(const Poly& b, int m, const QParam& q);

}  // namespace qsum
