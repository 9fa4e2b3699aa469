#include "qsum/partial_fractions.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsum/factor.hpp"
#include "qsum/qshift.hpp"
#include "qsum/upoly.hpp"

namespace qsum {

namespace {

/// Q(other)[var] view of a polynomial.
using KPoly = UPoly<RatFun>;

KPoly to_kpoly(const Poly& p, int var) {
  std::vector<RatFun> cs;
  for (const auto& c : coeffs_in(p, var)) cs.emplace_back(c);
  return KPoly(std::move(cs));
}

RatFun from_kpoly(const KPoly& p, int var) {
  // Common denominator of the coefficients, then one polynomial numerator.
  Poly den(1);
  for (const auto& c : p.coeffs()) den = den * divide(c.den(), gcd(den, c.den()));
  Poly num;
  for (int i = 0; i <= p.degree(); ++i) {
    const RatFun& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    num += shift_exponent(c.num() * divide(den, c.den()), var, i);
  }
  return RatFun(num, den);
}

struct Component {
  KPoly power;  // d^e, or var^s
  Poly d;       // the irreducible base; var itself for the pure-power part
  int e;
};

}  // namespace

PFDecomp partial_fractions(const RatFun& f, int var, const QParam& q, PfdGrouping grouping) {
  if (var != kX && var != kY) throw std::invalid_argument("partial fractions need var x or y");
  PFDecomp out;
  out.var = var;
  if (f.is_zero()) return out;

  const Poly var_poly = Poly::var(var);
  Factorization fac = factor_bivariate(f.den());
  Poly b(fac.unit);
  std::vector<Component> comps;
  for (const auto& [h, e] : fac.factors) {
    if (!h.uses(var)) {
      b *= pow(h, static_cast<unsigned>(e));
    } else {
      comps.push_back({to_kpoly(pow(h, static_cast<unsigned>(e)), var), h, e});
    }
  }

  KPoly dv(RatFun(1));
  for (const auto& c : comps) dv *= c.power;
  const KPoly num = scale(to_kpoly(f.num(), var), RatFun(Poly(1), b));
  auto [quot, r] = divrem(num, dv);

  for (int i = 0; i <= quot.degree(); ++i) {
    const RatFun& c = quot.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (i == 0)
      out.mu = c;
    else
      out.monomials.emplace_back(i, c);
  }

  for (std::size_t k = 0; k < comps.size(); ++k) {
    const Component& comp = comps[k];
    KPoly cofactor(RatFun(1));
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (i != k) cofactor *= comps[i].power;
    const XGcd<RatFun> bz = xgcd(rem(cofactor, comp.power), comp.power);
    if (bz.g.degree() != 0) throw std::logic_error("denominator components are not coprime");
    KPoly rk = rem(rem(r, comp.power) * bz.s, comp.power);
    if (rk.is_zero()) continue;

    if (comp.d == var_poly) {
      for (int i = 0; i <= rk.degree(); ++i) {
        const RatFun& c = rk.coeffs()[static_cast<std::size_t>(i)];
        if (!c.is_zero()) out.monomials.emplace_back(i - comp.e, c);
      }
      continue;
    }
    const KPoly dk = to_kpoly(comp.d, var);
    for (int i = 0; i < comp.e && !rk.is_zero(); ++i) {
      auto [next, digit] = divrem(rk, dk);
      if (!digit.is_zero()) out.terms.push_back({comp.d, comp.e - i, 0, from_kpoly(digit, var)});
      rk = std::move(next);
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const auto& a, const auto& c) { return a.first < c.first; });

  if (grouping == PfdGrouping::ByOrbit && !out.terms.empty()) {
    std::vector<Poly> ds;
    for (const auto& t : out.terms)
      if (std::find(ds.begin(), ds.end(), t.d) == ds.end()) ds.push_back(t.d);
    const auto classes = orbit_partition(ds, var == kX ? ShiftGroup::TauX : ShiftGroup::TauY, q);
    std::vector<FractionTerm> grouped;
    for (const auto& cls : classes)
      for (const auto& m : cls.members)
        for (const auto& t : out.terms) {
          if (!(t.d == m.poly)) continue;
          // d^j == q^{vpow j} (tau^ell rep)^j
          grouped.push_back({cls.representative, t.j, m.sigma.exps[var],
                             q.pow(-m.sigma.vpow * t.j) * t.a});
        }
    out.terms = std::move(grouped);
  }
  return out;
}

RatFun reconstruct(const PFDecomp& pfd, const QParam& q) {
  RatFun sum = pfd.mu;
  for (const auto& [n, c] : pfd.monomials)
    sum += c * (n > 0 ? RatFun(Poly::var(pfd.var, n)) : RatFun(Poly(1), Poly::var(pfd.var, -n)));
  for (const auto& t : pfd.terms)
    sum += t.a / RatFun(pow(tau(t.d, pfd.var, t.ell, q), static_cast<unsigned>(t.j)));
  return sum;
}

}  // namespace qsum
