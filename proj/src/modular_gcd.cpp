#include "modular_gcd.hpp"

#include <gmp.h>

#include <algorithm>
#include <mutex>

#include "zp_poly.hpp"

namespace qsum::detail {

namespace {

// Dense coefficient grids: row i is the coefficient of v^i as a list of
// coefficients in u (lowest first). Without a second variable each row has
// a single entry.
using IntGrid = std::vector<std::vector<Int>>;
using ZpGrid = std::vector<std::vector<u64>>;

Poly integer_primitive(const Poly& p) {
  Int den = 1;
  for (const auto& [e, c] : p.terms()) den = lcm(den, Int(c.get_den()));
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, Int(c * den));
  Rat scale(den, g);
  scale.canonicalize();
  if (p.leading_coeff() < 0) scale = -scale;
  return p * scale;
}

Int integer_content(const Poly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, Int(c.get_num()));
  return g;
}

IntGrid to_grid(const Poly& p, int v, int u, std::size_t width) {
  IntGrid out(static_cast<std::size_t>(p.degree(v) + 1), std::vector<Int>(width, Int(0)));
  for (const auto& [e, c] : p.terms())
    out[static_cast<std::size_t>(e[v])][u < 0 ? 0 : static_cast<std::size_t>(e[u])] = c.get_num();
  return out;
}

Poly from_grid(const IntGrid& g, int v, int u) {
  Poly out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if (g[i][j] == 0) continue;
      Exponents e{};
      e[v] = static_cast<int>(i);
      if (u >= 0) e[u] = static_cast<int>(j);
      out.add_term(e, Rat(g[i][j]));
    }
  return out;
}

ZpGrid reduce(const Zp& f, const IntGrid& g) {
  ZpGrid out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& c : g[i]) out[i].push_back(f.reduce(c));
  return out;
}

u64 horner(const Zp& f, const std::vector<u64>& cs, u64 x) {
  u64 acc = 0;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

ZpPoly evaluate(const Zp& f, const ZpGrid& g, u64 alpha) {
  ZpPoly out;
  for (const auto& row : g) out.push_back(horner(f, row, alpha));
  f.trim(out);
  return out;
}

/// Coefficients (lowest first) of the polynomial of degree < n through the
/// points (xs[k], ys[k]).
std::vector<u64> interpolate(const Zp& f, const std::vector<u64>& xs, std::vector<u64> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = n - 1; k >= j; --k)
      ys[k] = f.mul(f.sub(ys[k], ys[k - 1]), f.inv(f.sub(xs[k], xs[k - j])));
  std::vector<u64> poly{ys[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly <- poly * (u - xs[k]) + ys[k]
    std::vector<u64> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.sub(next[i], f.mul(poly[i], xs[k]));
    }
    next[0] = f.add(next[0], ys[k]);
    poly = std::move(next);
  }
  poly.resize(n, 0);
  return poly;
}

/// Image of gamma * gcd / lc(gcd) modulo p, or nullopt if p is unusable.
std::optional<ZpGrid> image_mod_p(const Zp& f, const ZpGrid& a, const ZpGrid& b,
                                  const std::vector<u64>& gamma, std::size_t points) {
  auto vanishes = [](const std::vector<u64>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](u64 c) { return c == 0; });
  };
  if (vanishes(a.back()) || vanishes(b.back())) return std::nullopt;
  std::vector<u64> xs;
  std::vector<ZpPoly> vals;
  int best = -1;
  for (u64 alpha = 0; xs.size() < points; ++alpha) {
    if (alpha >= f.p()) return std::nullopt;
    if (horner(f, a.back(), alpha) == 0 || horner(f, b.back(), alpha) == 0) continue;
    ZpPoly g = f.gcd(evaluate(f, a, alpha), evaluate(f, b, alpha));
    const int d = f.degree(g);
    if (best >= 0 && d > best) continue;
    if (best < 0 || d < best) {
      best = d;
      xs.clear();
      vals.clear();
    }
    xs.push_back(alpha);
    vals.push_back(f.scale(g, horner(f, gamma, alpha)));
    if (d == 0) break;
  }
  if (best == 0) return ZpGrid{};
  ZpGrid out(static_cast<std::size_t>(best + 1));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<u64> ys;
    for (const auto& v : vals) ys.push_back(i < v.size() ? v[i] : 0);
    out[i] = interpolate(f, xs, std::move(ys));
  }
  return out;
}

/// The k-th largest prime below 2^31, generated on demand.
u64 nth_prime(std::size_t k) {
  static std::vector<u64> primes;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  while (primes.size() <= k) {
    u64 n = primes.empty() ? 2147483649ULL : primes.back();
    Int z;
    do {
      n -= 2;
      z = static_cast<unsigned long>(n);
    } while (mpz_probab_prime_p(z.get_mpz_t(), 25) == 0);
    primes.push_back(n);
  }
  return primes[k];
}

}  // namespace

std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const int v = std::max(a.max_var(), b.max_var());
  if (v < 0 || v > kY || !a.uses(v) || !b.uses(v)) return std::nullopt;
  const int u = (v == kY && (a.uses(kX) || b.uses(kX))) ? kX : -1;

  Poly pa = integer_primitive(a), pb = integer_primitive(b);
  Poly c(1);
  if (u >= 0) {
    const Poly ca = content(pa, v), cb = content(pb, v);
    c = gcd(ca, cb);
    pa = integer_primitive(divide(pa, ca));
    pb = integer_primitive(divide(pb, cb));
  }
  const Poly la = coeffs_in(pa, v).back(), lb = coeffs_in(pb, v).back();
  // gcd of the leading coefficients in Z[u]: lc of the true gcd divides it.
  const Poly gamma = integer_primitive(gcd(la, lb)) * Rat(gcd(integer_content(la), integer_content(lb)));

  const std::size_t points =
      u < 0 ? 1
            : static_cast<std::size_t>(gamma.degree(u) + std::min(pa.degree(u), pb.degree(u)) + 1);
  const std::size_t width = u < 0 ? 1 : static_cast<std::size_t>(std::max(pa.degree(u), pb.degree(u)) + 1);
  const IntGrid ga = to_grid(pa, v, u, width), gb = to_grid(pb, v, u, width);
  const IntGrid ggamma =
      to_grid(gamma, v, u, u < 0 ? 1 : static_cast<std::size_t>(gamma.degree(u) + 1));

  IntGrid acc;
  Int modulus = 0;
  std::optional<Poly> last;
  for (std::size_t round = 0; round < 2000; ++round) {
    const u64 p = nth_prime(round);
    const Zp f(p);
    const ZpGrid ra = reduce(f, ga), rb = reduce(f, gb);
    const auto img = image_mod_p(f, ra, rb, reduce(f, ggamma)[0], points);
    if (!img) continue;
    if (img->empty()) return monic(c);
    if (modulus != 0 && img->size() > acc.size()) continue;
    const Int pz(static_cast<unsigned long>(p));
    if (modulus == 0 || img->size() < acc.size()) {
      acc.assign(img->size(), std::vector<Int>(points, Int(0)));
      for (std::size_t i = 0; i < img->size(); ++i)
        for (std::size_t j = 0; j < points; ++j) acc[i][j] = static_cast<unsigned long>((*img)[i][j]);
      modulus = pz;
      last.reset();
    } else {
      const u64 minv = f.inv(f.reduce(modulus));
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < points; ++j) {
          const u64 t = f.mul(f.sub((*img)[i][j], f.reduce(acc[i][j])), minv);
          acc[i][j] += modulus * static_cast<unsigned long>(t);
        }
      modulus *= pz;
    }
    IntGrid lifted = acc;
    const Int half = modulus / 2;
    for (auto& row : lifted)
      for (auto& x : row)
        if (x > half) x -= modulus;
    Poly cand = from_grid(lifted, v, u);
    cand = u >= 0 ? primitive_part(cand, v) : monic(cand);
    if (last && *last == cand && divide_exact(pa, cand) && divide_exact(pb, cand))
      return monic(c * cand);
    last = std::move(cand);
  }
  return std::nullopt;
}

}  // namespace qsum::detail
