#include "qsum/qgosper.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsum/factor.hpp"
#include "qsum/qshift.hpp"

namespace qsum {

namespace {

void require_univariate_x(const Poly& p, const char* what) {
  if (p.is_zero()) throw std::domain_error(std::string(what) + " must be nonzero");
  if (p.max_var() > kX) throw std::invalid_argument(std::string(what) + " must be a polynomial in x");
}

/// p / x^k with k the x-adic valuation.
Poly strip_x_power(const Poly& p, int& k) {
  k = p.low_degree(kX);
  return shift_exponent(p, kX, -k);
}

}  // namespace

std::vector<long> shift_gcd_spectrum(const Poly& f, const Poly& g, int m, const QParam& q) {
  require_univariate_x(f, "f");
  require_univariate_x(g, "g");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (f.constant_term() == 0 && g.constant_term() == 0)
    throw std::domain_error("f and g share the root 0, so every shift has a common factor");
  if (f.is_constant() || g.is_constant()) return {};
  // A common factor of f(x) and g(x q^k) is a product of irreducible factors
  // u of f with u ~ w(x q^k) for an irreducible factor w of g.
  const auto fu = factor_univariate(f).factors;
  const auto gw = factor_univariate(g).factors;
  std::vector<long> out;
  for (const auto& [u, mu] : fu)
    for (const auto& [w, mw] : gw) {
      if (u.degree(kX) != w.degree(kX)) continue;
      auto rel = tau_equivalent_in_var(w, u, kX, q);
      if (!rel || rel->ell < 0 || rel->ell % m != 0) continue;
      out.push_back(rel->ell / m);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GosperTriple gosper_representation(const Poly& num, const Poly& den, int m, const QParam& q) {
  require_univariate_x(num, "numerator");
  require_univariate_x(den, "denominator");
  if (m < 1) throw std::invalid_argument("m must be positive");
  int ka = 0, kb = 0;
  Poly A = strip_x_power(num, ka);
  Poly B = strip_x_power(den, kb);
  Poly C(1);
  for (long h : shift_gcd_spectrum(A, B, m, q)) {
    const Rat step = q.pow(h * m);
    Poly s = gcd(A, scale_var(B, kX, step));
    if (s.is_constant()) continue;
    A = divide(A, s);
    B = divide(B, scale_var(s, kX, 1 / step));
    for (long i = 1; i <= h; ++i) C *= scale_var(s, kX, q.pow(-i * m));
  }
  // Put the x-power that survives cancellation back on the side it came from.
  const int common = std::min(ka, kb);
  A = shift_exponent(A, kX, ka - common);
  B = shift_exponent(B, kX, kb - common);
  B = monic(B);
  C = monic(C);
  // num * B * C(x) == kappa * A_monic * den * C(x q^m) fixes the unit kappa.
  const Rat kappa = num.leading_coeff() /
                    (den.leading_coeff() * q.pow(static_cast<long>(m) * C.degree(kX)));
  A = monic(A) * kappa;
  return {A, B, C, m};
}

GosperTriple m_fold_gosper(const Poly& b, int m, const QParam& q) {
  require_univariate_x(b, "b");
  return gosper_representation(b, scale_var(b, kX, q.pow(m)), m, q);
}

}  // namespace qsum
