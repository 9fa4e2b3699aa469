#pragma once

#include <array>

#include "qsum/poly.hpp"

namespace qsum {

/// The group element q^vpow * tau_0^exps[0] * ... * tau_3^exps[3].
struct ShiftMonomial {
  long vpow = 0;
  std::array<int, kMaxVars> exps{};

  static ShiftMonomial tau(int v, int power = 1) {
    ShiftMonomial s;
    s.exps[v] = power;
    return s;
  }

  ShiftMonomial inverse() const;
  friend ShiftMonomial compose(const ShiftMonomial& a, const ShiftMonomial& b);
  friend bool operator==(const ShiftMonomial&, const ShiftMonomial&) = default;
};

/// Rational function in canonical form: gcd(num, den) == 1 and den is monic
/// under the lex order. Equal values have equal representations.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  RatFun(int c) : RatFun(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  RatFun(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool uses(int v) const { return num_.uses(v) || den_.uses(v); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Builds from parts already known to be canonical.
  static RatFun from_canonical(Poly num, Poly den);

 private:
  Poly num_;
  Poly den_;
};

/// Canonical form of num/den.
RatFun ratfun_normalize(const Poly& num, const Poly& den);

RatFun pow(const RatFun& f, long k);

/// Substitutes x_v -> q^{exps[v]} x_v and multiplies by q^{vpow}.
Poly apply_shift(const Poly& p, const ShiftMonomial& s, const QParam& q);
RatFun apply_shift(const RatFun& f, const ShiftMonomial& s, const QParam& q);

/// tau_v^k f.
Poly tau(const Poly& p, int v, int k, const QParam& q);
RatFun tau(const RatFun& f, int v, int k, const QParam& q);

}  // namespace qsum
