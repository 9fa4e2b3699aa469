#include <algorithm>
#include <stdexcept>

#include "factor_internal.hpp"
#include "qsum/factor.hpp"

namespace qsum {

namespace {

using YPoly = UPoly<Rat>;
/// Truncated power series in s = x - x0 with coefficients in Q[y].
using Series = std::vector<YPoly>;

Series to_series(const Poly& p, std::size_t n) {
  Series out(n);
  auto cs = coeffs_in(p, kX);
  for (std::size_t k = 0; k < cs.size() && k < n; ++k) out[k] = detail::to_upoly(cs[k], kY);
  return out;
}

Poly from_series(const Series& s) {
  std::vector<Poly> cs;
  for (const auto& c : s) cs.push_back(detail::from_upoly(c, kY));
  return from_coeffs(cs, kX);
}

Series mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Lifts f == g0*h0 (mod s) to f == g*h (mod s^n); g0, h0 monic and coprime.
std::pair<Series, Series> lift_pair(const Series& f, const YPoly& g0, const YPoly& h0) {
  const std::size_t n = f.size();
  auto bz = xgcd(g0, h0);
  Series g(n), h(n);
  g[0] = g0;
  h[0] = h0;
  for (std::size_t k = 1; k < n; ++k) {
    YPoly e = f[k];
    for (std::size_t i = 0; i <= k; ++i) {
      if (g[i].is_zero() || h[k - i].is_zero()) continue;
      e -= g[i] * h[k - i];
    }
    if (e.is_zero()) continue;
    auto [quot, dg] = divrem(bz.t * e, g0);
    g[k] = dg;
    h[k] = bz.s * e + quot * h0;
  }
  return {g, h};
}

/// Irreducible factors of g in Q[x,y]; g is primitive and squarefree in y,
/// with deg_y(g) >= 2 and deg_x(g) >= 1.
std::vector<Poly> factor_squarefree_bivariate(const Poly& g) {
  Poly lc_y = coeffs_in(g, kY).back();
  // Good reduction points: 0, 1, -1, 2, -2, ...; keep the best of three.
  Rat best_x0;
  std::vector<YPoly> best;
  int found = 0;
  for (int t = 0; t < 200 && found < 3; ++t) {
    Rat x0 = (t % 2 == 1) ? Rat((t + 1) / 2) : Rat(-(t / 2));
    if (substitute(lc_y, kX, x0).is_zero()) continue;
    YPoly image = detail::to_upoly(substitute(g, kX, x0), kY);
    if (gcd(image, derivative(image)).degree() != 0) continue;
    auto facs = detail::irreducible_factors_rat(monic(image));
    if (found == 0 || facs.size() < best.size()) {
      best_x0 = x0;
      best = std::move(facs);
    }
    ++found;
    if (best.size() == 1) break;
  }
  if (found == 0) throw std::runtime_error("no good reduction point for bivariate factorization");
  if (best.size() == 1) return {monic(g)};

  const std::size_t n =
      static_cast<std::size_t>(g.degree(kX) + lc_y.degree(kX) + 1);
  Poly shifted = translate(g, kX, best_x0);
  auto lc_series = [&](const Poly& p) {
    Series s(n);
    auto cs = coeffs_in(coeffs_in(p, kY).back(), kX);
    for (std::size_t k = 0; k < cs.size() && k < n; ++k) s[k] = YPoly(cs[k].constant_term());
    return s;
  };
  // Monic (in y) target: shifted / lc_y(shifted) as a series in s.
  Series lc = lc_series(shifted);
  std::vector<Rat> inv(n, Rat(0));
  inv[0] = 1 / lc[0][0];
  for (std::size_t k = 1; k < n; ++k) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += lc[i][0] * inv[k - i];
    inv[k] = -acc * inv[0];
  }
  Series inv_series(n);
  for (std::size_t k = 0; k < n; ++k) inv_series[k] = YPoly(inv[k]);
  Series target = mul(to_series(shifted, n), inv_series);

  std::vector<Series> lifted;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    YPoly rest(Rat(1));
    for (std::size_t j = i + 1; j < best.size(); ++j) rest *= best[j];
    auto [gi, hi] = lift_pair(target, best[i], rest);
    lifted.push_back(std::move(gi));
    target = std::move(hi);
  }
  lifted.push_back(std::move(target));

  std::vector<Poly> out;
  Poly cur = g;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    Series lc_cur = lc_series(translate(cur, kX, best_x0));
    while (true) {
      Series prod = lc_cur;
      for (auto i : idx) prod = mul(prod, lifted[i]);
      Poly cand = translate(from_series(prod), kX, -best_x0);
      cand = primitive_part(cand, kY);
      if (cand.degree(kY) > 0) {
        if (auto quot = divide_exact(cur, cand)) {
          out.push_back(cand);
          cur = std::move(*quot);
          for (auto it = idx.rbegin(); it != idx.rend(); ++it)
            lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
          hit = true;
          break;
        }
      }
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (cur.degree(kY) > 0) out.push_back(monic(cur));
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p, int v) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly c = content(p, v);
  if (!c.is_constant()) out.emplace_back(c, 1);
  Poly a = divide(p, c);
  if (a.degree(v) < 1) return out;
  Poly b = derivative(a, v);
  Poly g = gcd(a, b);
  Poly w = divide(a, g);
  Poly y = divide(b, g);
  Poly z = y - derivative(w, v);
  int i = 1;
  while (w.degree(v) > 0) {
    Poly h = gcd(w, z);
    if (h.degree(v) > 0) out.emplace_back(monic(h), i);
    w = divide(w, h);
    y = divide(z, h);
    z = y - derivative(w, v);
    ++i;
  }
  return out;
}

Factorization factor_bivariate(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of zero");
  if (p.max_var() > kY) throw std::invalid_argument("factor_bivariate expects a polynomial in x, y");
  if (!p.uses(kX) || !p.uses(kY)) return factor_univariate(p);
  Factorization out;
  out.unit = p.leading_coeff();
  Poly cx = content(p, kY);
  if (!cx.is_constant())
    for (auto& fm : factor_univariate(cx).factors) out.factors.push_back(std::move(fm));
  Poly pp = divide(p, cx);
  for (const auto& [part, mult] : squarefree_decompose(pp, kY)) {
    if (part.degree(kY) < 1) continue;
    std::vector<Poly> irr;
    if (part.degree(kY) == 1) {
      irr.push_back(monic(part));
    } else if (!part.uses(kX)) {
      for (auto& [h, m] : factor_univariate(part).factors) irr.push_back(h);
    } else {
      irr = factor_squarefree_bivariate(part);
    }
    for (auto& h : irr) out.factors.emplace_back(monic(h), mult);
  }
  detail::sort_factors(out);
  return out;
}

}  // namespace qsum
