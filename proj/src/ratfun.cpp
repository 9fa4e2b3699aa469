#include "qsum/ratfun.hpp"

#include <stdexcept>
#include <utility>

namespace qsum {

ShiftMonomial ShiftMonomial::inverse() const {
  ShiftMonomial s;
  s.vpow = -vpow;
  for (int i = 0; i < kMaxVars; ++i) s.exps[i] = -exps[i];
  return s;
}

ShiftMonomial compose(const ShiftMonomial& a, const ShiftMonomial& b) {
  ShiftMonomial s;
  s.vpow = a.vpow + b.vpow;
  for (int i = 0; i < kMaxVars; ++i) s.exps[i] = a.exps[i] + b.exps[i];
  return s;
}

RatFun::RatFun(const Poly& num, const Poly& den) {
  *this = ratfun_normalize(num, den);
}

RatFun RatFun::from_canonical(Poly num, Poly den) {
  RatFun f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFun ratfun_normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return RatFun();
  Poly n = num;
  Poly d = den;
  if (!d.is_constant()) {
    Poly g = gcd(n, d);
    if (!g.is_constant()) {
      n = divide(n, g);
      d = divide(d, g);
    }
  }
  Rat lc = d.leading_coeff();
  return RatFun::from_canonical(n / lc, d / lc);
}

RatFun RatFun::operator-() const { return from_canonical(-num_, den_); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = ratfun_normalize(num_ + o.num_, den_);
  if (den_.is_constant() && o.den_.is_constant())
    return *this = from_canonical(num_ + o.num_, Poly(1));
  Poly g = gcd(den_, o.den_);
  Poly b1 = divide(den_, g);
  Poly d1 = divide(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFun();
  Poly d = b1 * d1;
  if (!g.is_constant()) {
    Poly h = gcd(n, g);
    if (!h.is_constant()) {
      n = divide(n, h);
      g = divide(g, h);
    }
    d *= g;
  }
  Rat lc = d.leading_coeff();
  return *this = from_canonical(n / lc, d / lc);
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    Poly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = divide(a, g1);
      d = divide(d, g1);
    }
  }
  if (!b.is_constant()) {
    Poly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = divide(c, g2);
      b = divide(b, g2);
    }
  }
  Poly n = a * c;
  Poly m = b * d;
  Rat lc = m.leading_coeff();
  return *this = from_canonical(n / lc, m / lc);
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("rational function divided by zero");
  return *this *= ratfun_normalize(o.den_, o.num_);
}

RatFun pow(const RatFun& f, long k) {
  if (k < 0) {
    if (f.is_zero()) throw std::domain_error("zero raised to a negative power");
    return RatFun::from_canonical(Poly(1), Poly(1)) /
           RatFun::from_canonical(pow(f.num(), static_cast<unsigned>(-k)),
                                  pow(f.den(), static_cast<unsigned>(-k)));
  }
  Poly n = pow(f.num(), static_cast<unsigned>(k));
  Poly d = pow(f.den(), static_cast<unsigned>(k));
  return RatFun::from_canonical(std::move(n), std::move(d));
}

Poly apply_shift(const Poly& p, const ShiftMonomial& s, const QParam& q) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    long k = s.vpow;
    for (int i = 0; i < kMaxVars; ++i) k += static_cast<long>(s.exps[i]) * e[i];
    out.add_term(e, c * q.pow(k));
  }
  return out;
}

RatFun apply_shift(const RatFun& f, const ShiftMonomial& s, const QParam& q) {
  if (f.is_zero()) return f;
  ShiftMonomial plain = s;
  plain.vpow = 0;
  Poly n = apply_shift(f.num(), s, q);
  Poly d = apply_shift(f.den(), plain, q);
  Rat lc = d.leading_coeff();
  return RatFun::from_canonical(n / lc, d / lc);
}

Poly tau(const Poly& p, int v, int k, const QParam& q) {
  return apply_shift(p, ShiftMonomial::tau(v, k), q);
}

RatFun tau(const RatFun& f, int v, int k, const QParam& q) {
  return apply_shift(f, ShiftMonomial::tau(v, k), q);
}

}  // namespace qsum
