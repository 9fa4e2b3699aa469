#include <algorithm>
#include <stdexcept>

#include "factor_internal.hpp"
#include "qsum/factor.hpp"
#include "zp_poly.hpp"

namespace qsum {

namespace {

using detail::u64;
using detail::Zp;
using detail::ZpPoly;
using IntPoly = std::vector<Int>;  // lowest degree first, trimmed

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

IntPoly to_int(const ZpPoly& a) {
  IntPoly out;
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

ZpPoly to_zp(const Zp& f, const IntPoly& a) {
  ZpPoly out;
  for (const auto& c : a) out.push_back(f.reduce(c));
  f.trim(out);
  return out;
}

/// Quotient of a by the monic b when the division is exact.
std::optional<IntPoly> divide_monic(const IntPoly& a, const IntPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  IntPoly r = a;
  IntPoly quot(a.size() - b.size() + 1, Int(0));
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    Int c = r[k];
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  trim(quot);
  return quot;
}

void reduce_mod(IntPoly& a, const Int& m, bool symmetric) {
  Int half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (symmetric && c > half) c -= m;
  }
  trim(a);
}

/// Lifts target == g0*h0 (mod p) to a factorization modulo p^k.
std::pair<IntPoly, IntPoly> hensel_pair(const Zp& f, const IntPoly& target, const ZpPoly& g0,
                                        const ZpPoly& h0, unsigned k) {
  auto [s, t] = f.bezout(g0, h0);
  IntPoly g = to_int(g0);
  IntPoly h = to_int(h0);
  const Int p(static_cast<unsigned long>(f.p()));
  Int pk = p;
  for (unsigned step = 1; step < k; ++step) {
    IntPoly e = mul(g, h);
    e.resize(std::max(e.size(), target.size()), Int(0));
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = (i < target.size() ? target[i] : Int(0)) - e[i];
      e[i] /= pk;
    }
    trim(e);
    ZpPoly ep = to_zp(f, e);
    if (!ep.empty()) {
      ZpPoly te = f.mul(t, ep);
      auto [quot, dg] = f.divrem(te, g0);
      ZpPoly dh = f.add(f.mul(s, ep), f.mul(quot, h0));
      IntPoly dgi = to_int(dg);
      IntPoly dhi = to_int(dh);
      for (std::size_t i = 0; i < dgi.size(); ++i) g[i] += pk * dgi[i];
      for (std::size_t i = 0; i < dhi.size(); ++i) h[i] += pk * dhi[i];
    }
    pk *= p;
  }
  reduce_mod(g, pk, false);
  reduce_mod(h, pk, false);
  return {g, h};
}

std::vector<u64> small_primes() {
  std::vector<u64> out;
  for (u64 n = 11; out.size() < 200; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

/// Irreducible factors of a monic, squarefree, integer polynomial.
std::vector<IntPoly> zassenhaus_monic(const IntPoly& g) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n <= 1) return {g};

  u64 best_p = 0;
  std::vector<ZpPoly> best;
  int good = 0;
  for (u64 p : small_primes()) {
    Zp f(p);
    ZpPoly gp = to_zp(f, g);
    ZpPoly dg = f.derivative(gp);
    if (dg.empty() || f.degree(f.gcd(gp, dg)) != 0) continue;
    auto facs = f.factor_squarefree(gp);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++good == 3) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
  if (best.size() == 1) return {g};

  // Mignotte-style bound on the coefficients of any monic factor.
  Int norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Int bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned long>(n);
  bound = 2 * bound + 1;
  const Zp f(best_p);
  const Int p(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  Int pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  std::vector<IntPoly> lifted;
  IntPoly target = g;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ZpPoly rest{1};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = f.mul(rest, best[j]);
    auto [gi, hi] = hensel_pair(f, target, best[i], rest, k);
    lifted.push_back(std::move(gi));
    target = std::move(hi);
  }
  lifted.push_back(std::move(target));

  std::vector<IntPoly> out;
  IntPoly cur = g;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      IntPoly prod{Int(1)};
      for (auto i : idx) {
        prod = mul(prod, lifted[i]);
        reduce_mod(prod, pk, false);
      }
      reduce_mod(prod, pk, true);
      bool plausible = cur[0] == 0 || (prod[0] != 0 && cur[0] % prod[0] == 0);
      if (plausible) {
        if (auto quot = divide_monic(cur, prod)) {
          out.push_back(prod);
          cur = std::move(*quot);
          for (auto it = idx.rbegin(); it != idx.rend(); ++it)
            lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) out.push_back(cur);
  return out;
}

/// Irreducible monic factors over Q of a monic squarefree polynomial.
std::vector<UPoly<Rat>> factor_squarefree_rat(const UPoly<Rat>& a) {
  const int n = a.degree();
  if (n <= 1) return {a};
  // Primitive integer multiple with positive leading coefficient.
  Int den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, Int(c.get_den()));
  IntPoly F;
  for (const auto& c : a.coeffs()) F.emplace_back(Int(c * den));
  Int cont = 0;
  for (const auto& c : F) cont = gcd(cont, c);
  for (auto& c : F) c /= cont;
  if (F.back() < 0)
    for (auto& c : F) c = -c;
  // G(x) = lc^(n-1) F(x/lc) is monic with integer coefficients.
  const Int lc = F.back();
  IntPoly G(F.size());
  Int pw = 1;
  for (int i = n; i >= 0; --i) {
    if (i == n) {
      G[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    G[static_cast<std::size_t>(i)] = F[static_cast<std::size_t>(i)] * pw;
    pw *= lc;
  }
  std::vector<UPoly<Rat>> out;
  for (const auto& h : zassenhaus_monic(G)) {
    // Factor of F is h(lc * x), made monic over Q.
    std::vector<Rat> cs;
    Int scale = 1;
    for (const auto& c : h) {
      cs.emplace_back(c * scale);
      scale *= lc;
    }
    out.push_back(monic(UPoly<Rat>(std::move(cs))));
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<std::pair<UPoly<Rat>, int>> squarefree_rat(const UPoly<Rat>& f) {
  std::vector<std::pair<UPoly<Rat>, int>> out;
  UPoly<Rat> a = monic(f);
  if (a.degree() < 1) return out;
  UPoly<Rat> b = derivative(a);
  UPoly<Rat> c = gcd(a, b);
  UPoly<Rat> w = divrem(a, c).first;
  UPoly<Rat> y = divrem(b, c).first;
  UPoly<Rat> z = y - derivative(w);
  int i = 1;
  while (w.degree() > 0) {
    UPoly<Rat> g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divrem(w, g).first;
    y = divrem(z, g).first;
    z = y - derivative(w);
    ++i;
  }
  return out;
}

std::vector<UPoly<Rat>> irreducible_factors_rat(const UPoly<Rat>& squarefree_monic) {
  return factor_squarefree_rat(squarefree_monic);
}

UPoly<Rat> to_upoly(const Poly& p, int v) {
  std::vector<Rat> cs(static_cast<std::size_t>(std::max(p.degree(v) + 1, 0)), Rat(0));
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i)
      if (i != v && e[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    cs[static_cast<std::size_t>(e[v])] = c;
  }
  return UPoly<Rat>(std::move(cs));
}

Poly from_upoly(const UPoly<Rat>& a, int v) {
  Poly out;
  for (int i = 0; i <= a.degree(); ++i) {
    Exponents e{};
    e[v] = i;
    out.add_term(e, a[i]);
  }
  return out;
}

void sort_factors(Factorization& f) {
  std::sort(f.factors.begin(), f.factors.end(), [](const auto& a, const auto& b) {
    int c = compare_canonical(a.first, b.first);
    return c < 0 || (c == 0 && a.second < b.second);
  });
}

}  // namespace detail

Poly expand(const Factorization& f) {
  Poly out(f.unit);
  for (const auto& [p, m] : f.factors) out *= pow(p, static_cast<unsigned>(m));
  return out;
}

Factorization factor_univariate(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of zero");
  Factorization out;
  out.unit = p.leading_coeff();
  const int v = p.max_var();
  if (v < 0) return out;
  UPoly<Rat> a = monic(detail::to_upoly(p, v));
  int low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) {
    out.factors.emplace_back(Poly::var(v), low);
    a = UPoly<Rat>(std::vector<Rat>(a.coeffs().begin() + low, a.coeffs().end()));
  }
  for (const auto& [part, mult] : detail::squarefree_rat(a))
    for (const auto& h : factor_squarefree_rat(part))
      out.factors.emplace_back(detail::from_upoly(h, v), mult);
  detail::sort_factors(out);
  return out;
}

}  // namespace qsum
