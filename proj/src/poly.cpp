#include "qsum/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "modular_gcd.hpp"

namespace qsum {

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(int index, int power) {
  Exponents e{};
  e.at(static_cast<std::size_t>(index)) = power;
  return monomial(e, Rat(1));
}

Poly Poly::monomial(const Exponents& e, const Rat& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rat Poly::constant_term() const { return coeff(Exponents{}); }

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int Poly::low_degree(int v) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[v];
  for (const auto& [e, c] : terms_) d = std::min(d, e[v]);
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Poly::uses(int v) const {
  for (const auto& [e, c] : terms_)
    if (e[v] != 0) return true;
  return false;
}

int Poly::max_var() const {
  for (int v = kMaxVars - 1; v >= 0; --v)
    if (uses(v)) return v;
  return -1;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Poly& Poly::operator/=(const Rat& c) {
  if (c == 0) throw std::domain_error("polynomial divided by zero");
  for (auto& [e, x] : terms_) x /= c;
  return *this;
}

Poly pow(const Poly& p, unsigned k) {
  Poly out(1);
  Poly base = p;
  while (k) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return out;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.leading_coeff();
}

bool is_monic(const Poly& p) { return !p.is_zero() && p.leading_coeff() == 1; }

std::vector<Poly> coeffs_in(const Poly& p, int v) {
  std::vector<Poly> out(static_cast<std::size_t>(std::max(p.degree(v) + 1, 0)));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] = 0;
    out[static_cast<std::size_t>(e[v])].add_term(f, c);
  }
  return out;
}

Poly from_coeffs(const std::vector<Poly>& coeffs, int v) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& [e, c] : coeffs[i].terms()) {
      Exponents f = e;
      f[v] += static_cast<int>(i);
      out.add_term(f, c);
    }
  }
  return out;
}

Poly derivative(const Poly& p, int v) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    Exponents f = e;
    f[v] -= 1;
    out.add_term(f, c * e[v]);
  }
  return out;
}

Poly scale_var(const Poly& p, int v, const Rat& factor) {
  Poly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, c * pow(factor, e[v]));
  return out;
}

Poly substitute(const Poly& p, int v, const Rat& value) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] = 0;
    out.add_term(f, c * pow(value, e[v]));
  }
  return out;
}

Poly translate(const Poly& p, int v, const Rat& c) {
  auto cs = coeffs_in(p, v);
  Poly lin = Poly::var(v) + Poly(c);
  Poly out;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) out = out * lin + *it;
  return out;
}

Poly rename_var(const Poly& p, int from, int to) {
  if (from == to) return p;
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[to] += f[from];
    f[from] = 0;
    out.add_term(f, c);
  }
  return out;
}

Poly shift_exponent(const Poly& p, int v, int k) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] += k;
    out.add_term(f, c);
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a / b.constant_term();
  const Exponents& lb = b.leading_exponents();
  const Rat& cb = b.leading_coeff();
  Poly r = a;
  Poly quot;
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    Exponents d;
    for (int i = 0; i < kMaxVars; ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) return std::nullopt;
    }
    Rat t = r.leading_coeff() / cb;
    quot.add_term(d, t);
    for (const auto& [e, c] : b.terms()) {
      Exponents f;
      for (int i = 0; i < kMaxVars; ++i) f[i] = e[i] + d[i];
      r.add_term(f, -t * c);
    }
  }
  return quot;
}

Poly divide(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *std::move(q);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  int db = b.degree(v);
  if (db < 0) throw std::domain_error("pseudo-remainder by zero");
  auto bc = coeffs_in(b, v);
  const Poly& lb = bc.back();
  Poly r = a;
  int dr = r.degree(v);
  while (!r.is_zero() && dr >= db) {
    Poly lr = coeffs_in(r, v).back();
    r = lb * r - shift_exponent(lr * b, v, dr - db);
    dr = r.degree(v);
  }
  return r;
}

Poly content(const Poly& p, int v) {
  if (p.is_zero()) return p;
  auto cs = coeffs_in(p, v);
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive_part(const Poly& p, int v) {
  if (p.is_zero()) return p;
  return monic(divide(p, content(p, v)));
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (auto g = detail::modular_gcd(a, b)) return *g;
  int v = std::max(a.max_var(), b.max_var());
  if (v < 0) return Poly(1);
  if (!a.uses(v)) return gcd(a, content(b, v));
  if (!b.uses(v)) return gcd(content(a, v), b);
  Poly ca = content(a, v);
  Poly cb = content(b, v);
  Poly c = gcd(ca, cb);
  Poly pa = monic(divide(a, ca));
  Poly pb = monic(divide(b, cb));
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    if (pb.is_zero()) break;
    if (pb.degree(v) == 0) {
      pa = Poly(1);
      break;
    }
    Poly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_part(r, v);
  }
  return monic(c * pa);
}

namespace {

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Poly resultant(const Poly& a, const Poly& b, int v) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of zero polynomial");
  int n = a.degree(v);
  int m = b.degree(v);
  if (n == 0) return pow(a, static_cast<unsigned>(m));
  if (m == 0) return pow(b, static_cast<unsigned>(n));
  auto ac = coeffs_in(a, v);
  auto bc = coeffs_in(b, v);
  const auto size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[r][r + i] = ac[n - i];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl[m + r][r + i] = bc[m - i];
  return bareiss_det(std::move(syl));
}

int compare_canonical(const Poly& a, const Poly& b) {
  int ta = a.total_degree();
  int tb = b.total_degree();
  if (ta != tb) return ta < tb ? -1 : 1;
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  LexLess less;
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  ia = a.terms().rbegin();
  ib = b.terms().rbegin();
  for (; ia != a.terms().rend(); ++ia, ++ib) {
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace qsum
