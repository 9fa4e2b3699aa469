#include "zp_poly.hpp"

#include <stdexcept>

namespace qsum::detail {

u64 Zp::pow(u64 a, u64 e) const {
  u64 r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

u64 Zp::reduce(const Int& z) const {
  Int r = z % Int(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

void Zp::trim(ZpPoly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly Zp::add(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
  trim(out);
  return out;
}

ZpPoly Zp::sub(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
  trim(out);
  return out;
}

ZpPoly Zp::mul(const ZpPoly& a, const ZpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
  }
  trim(out);
  return out;
}

ZpPoly Zp::scale(const ZpPoly& a, u64 c) const {
  ZpPoly out = a;
  for (auto& x : out) x = mul(x, c);
  trim(out);
  return out;
}

std::pair<ZpPoly, ZpPoly> Zp::divrem(const ZpPoly& a, const ZpPoly& b) const {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  ZpPoly r = a;
  ZpPoly quot(a.size() - b.size() + 1, 0);
  const u64 inv_lc = inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    u64 c = mul(r[k], inv_lc);
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = sub(r[k - db + i], mul(c, b[i]));
  }
  r.resize(db);
  trim(r);
  trim(quot);
  return {quot, r};
}

ZpPoly Zp::monic(const ZpPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

ZpPoly Zp::gcd(ZpPoly a, ZpPoly b) const {
  while (!b.empty()) {
    ZpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::pair<ZpPoly, ZpPoly> Zp::bezout(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [quot, r] = divrem(r0, r1);
    ZpPoly s = sub(s0, mul(quot, s1));
    ZpPoly t = sub(t0, mul(quot, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  u64 c = inv(r0.back());
  return {scale(s0, c), scale(t0, c)};
}

ZpPoly Zp::derivative(const ZpPoly& a) const {
  ZpPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p_));
  trim(out);
  return out;
}

ZpPoly Zp::powmod(const ZpPoly& base, const Int& e, const ZpPoly& mod) const {
  ZpPoly result{1};
  ZpPoly b = rem(base, mod);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), mod);
  }
  return result;
}

void Zp::equal_degree(const ZpPoly& f, int d, std::mt19937_64& rng,
                      std::vector<ZpPoly>& out) const {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), p_, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p_ - 1);
  while (true) {
    ZpPoly a(static_cast<std::size_t>(n), 0);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    ZpPoly b = sub(powmod(a, e, f), ZpPoly{1});
    ZpPoly g = gcd(f, b);
    int dg = degree(g);
    if (dg > 0 && dg < n) {
      equal_degree(g, d, rng, out);
      equal_degree(divrem(f, g).first, d, rng, out);
      return;
    }
  }
}

std::vector<ZpPoly> Zp::factor_squarefree(const ZpPoly& f) const {
  std::vector<ZpPoly> out;
  std::mt19937_64 rng(0x5eedULL + p_);
  ZpPoly cur = monic(f);
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  int d = 1;
  while (2 * d <= degree(cur)) {
    h = powmod(h, Int(static_cast<unsigned long>(p_)), cur);
    ZpPoly g = gcd(cur, sub(h, x));
    if (degree(g) > 0) {
      equal_degree(g, d, rng, out);
      cur = divrem(cur, g).first;
      h = rem(h, cur);
    }
    ++d;
  }
  if (degree(cur) > 0) out.push_back(cur);
  return out;
}

}  // namespace qsum::detail
