#pragma once

// Dense polynomials over Z/pZ for p < 2^31, used by the univariate factorizer.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qsum/rational.hpp"

namespace qsum::detail {

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;  // lowest degree first, trimmed

class Zp {
 public:
  explicit Zp(u64 p) : p_(p) {}
  u64 p() const { return p_; }

  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 reduce(const Int& z) const;

  void trim(ZpPoly& a) const;
  int degree(const ZpPoly& a) const { return static_cast<int>(a.size()) - 1; }
  ZpPoly add(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly scale(const ZpPoly& a, u64 c) const;
  std::pair<ZpPoly, ZpPoly> divrem(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly rem(const ZpPoly& a, const ZpPoly& b) const { return divrem(a, b).second; }
  ZpPoly monic(const ZpPoly& a) const;
  ZpPoly gcd(ZpPoly a, ZpPoly b) const;
  /// s, t with s*a + t*b == gcd(a, b) (monic).
  std::pair<ZpPoly, ZpPoly> bezout(const ZpPoly& a, const ZpPoly& b) const;
  ZpPoly derivative(const ZpPoly& a) const;
  ZpPoly powmod(const ZpPoly& base, const Int& e, const ZpPoly& mod) const;

  /// Irreducible factors of a monic squarefree polynomial (p odd).
  std::vector<ZpPoly> factor_squarefree(const ZpPoly& f) const;

 private:
  void equal_degree(const ZpPoly& f, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) const;
  u64 p_;
};

}  // namespace qsum::detail
