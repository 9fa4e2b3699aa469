#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsum/ratfun.hpp"

namespace qsum {

inline bool is_zero_value(const Rat& r) { return r == 0; }
inline bool is_zero_value(const RatFun& f) { return f.is_zero(); }

/// Dense univariate polynomial over a field T (Rat, or RatFun acting as a
/// coefficient field). Coefficients are stored lowest degree first, trimmed.
template <class T>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  UPoly(const T& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)

  static UPoly monomial(int k, const T& c = T(1)) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T(0);
  }
  const T& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly scale(UPoly a, const T& c) {
    for (auto& x : a.c_) x *= c;
    a.trim();
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
std::pair<UPoly<T>, UPoly<T>> divrem(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {UPoly<T>(), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
  const T inv = T(1) / b.lc();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    T c = r[static_cast<std::size_t>(k)];
    if (is_zero_value(c)) continue;
    c *= inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b[i];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly<T>(std::move(quot)), UPoly<T>(std::move(r))};
}

template <class T>
UPoly<T> rem(const UPoly<T>& a, const UPoly<T>& b) {
  return divrem(a, b).second;
}

template <class T>
UPoly<T> monic(const UPoly<T>& a) {
  if (a.is_zero()) return a;
  return scale(a, T(1) / a.lc());
}

template <class T>
UPoly<T> derivative(const UPoly<T>& a) {
  std::vector<T> out;
  for (int i = 1; i <= a.degree(); ++i) out.push_back(a[i] * T(i));
  return UPoly<T>(std::move(out));
}

template <class T>
T evaluate(const UPoly<T>& a, const T& x) {
  T acc(0);
  for (int i = a.degree(); i >= 0; --i) acc = acc * x + a[i];
  return acc;
}

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    UPoly<T> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns (g, s, t) with s*a + t*b == g and g monic (g == 0 iff a == b == 0).
template <class T>
struct XGcd {
  UPoly<T> g, s, t;
};

template <class T>
XGcd<T> xgcd(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r0 = a, r1 = b;
  UPoly<T> s0(T(1)), s1;
  UPoly<T> t0, t1(T(1));
  while (!r1.is_zero()) {
    auto [quot, r] = divrem(r0, r1);
    UPoly<T> s = s0 - quot * s1;
    UPoly<T> t = t0 - quot * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lc();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

}  // namespace qsum
