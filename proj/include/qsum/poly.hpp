#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "qsum/rational.hpp"

namespace qsum {

inline constexpr int kMaxVars = 4;
inline constexpr int kX = 0;
inline constexpr int kY = 1;

using Exponents = std::array<int, kMaxVars>;

/// Pure lexicographic order with x0 < x1 < x2 < x3, i.e. the highest-index
/// variable is the most significant.
struct LexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/// Sparse polynomial over Q in at most kMaxVars variables. Variables are
/// identified by index; names belong to the I/O layer. No stored coefficient
/// is zero.
class Poly {
 public:
  using Terms = std::map<Exponents, Rat, LexLess>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(int index, int power = 1);
  static Poly monomial(const Exponents& e, const Rat& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coeff(const Exponents& e) const;

  /// -1 for the zero polynomial.
  int degree(int v) const;
  /// Smallest exponent of v over all terms; -1 for zero.
  int low_degree(int v) const;
  int total_degree() const;
  bool uses(int v) const;
  /// Highest variable index appearing, -1 for constants.
  int max_var() const;

  /// Coefficient of the lex-leading monomial. Throws on zero.
  const Rat& leading_coeff() const;
  const Exponents& leading_exponents() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  Poly& operator/=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rat& c) { return a /= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const Rat& c);

 private:
  Terms terms_;
};

Poly pow(const Poly& p, unsigned k);

/// Divides by the lex-leading coefficient. Zero stays zero.
Poly monic(const Poly& p);
bool is_monic(const Poly& p);

/// Dense coefficient list in v; entry i is the (v-free) coefficient of v^i.
std::vector<Poly> coeffs_in(const Poly& p, int v);
Poly from_coeffs(const std::vector<Poly>& coeffs, int v);

Poly derivative(const Poly& p, int v);
/// x_v -> factor * x_v.
Poly scale_var(const Poly& p, int v, const Rat& factor);
/// x_v -> value.
Poly substitute(const Poly& p, int v, const Rat& value);
/// x_v -> x_v + c.
Poly translate(const Poly& p, int v, const Rat& c);
/// Renames variable `from` to `to`; `to` must not occur in p.
Poly rename_var(const Poly& p, int from, int to);
/// Multiplies every term by x_v^k (k may be negative if all exponents allow it).
Poly shift_exponent(const Poly& p, int v, int k);

/// a / b when b divides a exactly in Q[x...], nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// Like divide_exact but throws std::logic_error when b does not divide a.
Poly divide(const Poly& a, const Poly& b);

/// lc_v(b)^k * a - Q * b with deg_v of the result < deg_v(b), for some k >= 0.
Poly pseudo_remainder(const Poly& a, const Poly& b, int v);

/// Monic gcd of the coefficients of p with respect to v; 0 for p == 0.
Poly content(const Poly& p, int v);
/// p / content(p, v), made monic.
Poly primitive_part(const Poly& p, int v);

/// Monic greatest common divisor; gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);

/// Resultant with respect to v, defined as the determinant of the Sylvester
/// matrix whose first deg_v(b) rows hold the coefficients of a (leading
/// first) and whose last deg_v(a) rows hold those of b.
Poly resultant(const Poly& a, const Poly& b, int v);

/// Total order: total degree, then lex on exponents (leading first), then
/// coefficient sequence. Returns <0, 0, >0.
int compare_canonical(const Poly& a, const Poly& b);

}  // namespace qsum
