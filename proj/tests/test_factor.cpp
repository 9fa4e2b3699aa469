#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qsum/factor.hpp"
#include "test_support.hpp"

using namespace qsum;
using namespace qsum::testing;

namespace {

bool has_factor(const Factorization& f, const Poly& p, int mult) {
  return std::any_of(f.factors.begin(), f.factors.end(),
                     [&](const auto& fm) { return fm.first == monic(p) && fm.second == mult; });
}

}  // namespace

TEST_CASE("squarefree_decompose") {
  Poly x = px(), y = py();
  auto a = squarefree_decompose(pow(x + y, 2) * (x + 1), kY);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == std::pair<Poly, int>(x + 1, 1));
  CHECK(a[1] == std::pair<Poly, int>(y + x, 2));
  auto b = squarefree_decompose(y * y - x * x, kY);
  REQUIRE(b.size() == 1);
  CHECK(b[0].second == 1);
  auto c = squarefree_decompose(pow(y, 3), kY);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::pair<Poly, int>(y, 3));
}

TEST_CASE("factor_univariate") {
  Poly x = px();
  auto a = factor_univariate(x * x - 1);
  CHECK(a.factors.size() == 2);
  CHECK(has_factor(a, x - 1, 1));
  CHECK(has_factor(a, x + 1, 1));
  auto b = factor_univariate(x * x + 1);
  CHECK(b.factors.size() == 1);
  auto c = factor_univariate(Rat(2) * x * x + Rat(2) * x);
  CHECK(c.unit == 2);
  CHECK(has_factor(c, x, 1));
  CHECK(has_factor(c, x + 1, 1));
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime.
  auto d = factor_univariate(pow(x, 4) - Rat(10) * x * x + 1);
  CHECK(d.factors.size() == 1);
  auto e = factor_univariate(pow(Rat(3) * x - 1, 3) * (x * x - 2) * pow(x, 2));
  CHECK(e.factors.size() == 3);
  CHECK(has_factor(e, Rat(3) * x - 1, 3));
  CHECK(expand(e) == pow(Rat(3) * x - 1, 3) * (x * x - 2) * pow(x, 2));
}

TEST_CASE("factor_bivariate") {
  Poly x = px(), y = py();
  auto a = factor_bivariate(x * x - y * y);
  CHECK(a.factors.size() == 2);
  CHECK(expand(a) == x * x - y * y);
  CHECK(factor_bivariate(x * x + y * y).factors.size() == 1);
  auto c = factor_bivariate((x + y) * (x + 1));
  CHECK(c.factors.size() == 2);
  CHECK(has_factor(c, x + y, 1));
  CHECK(has_factor(c, x + 1, 1));
  auto d = factor_bivariate(pow(x * y + 1, 2) * (y * y - x) * (x * x + y * y) * Rat(5));
  CHECK(d.factors.size() == 3);
  CHECK(d.unit == 5);
  CHECK(has_factor(d, x * y + 1, 2));
}

TEST_CASE("factorizations re-multiply to their input") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    Poly p(1);
    int nf = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < nf; ++k) {
      Poly f = random_nonzero_poly(rng, 2, 2, 3, 4);
      while (f.total_degree() > 4 || f.is_constant()) f = random_nonzero_poly(rng, 2, 2, 3, 4);
      p *= f;
    }
    auto fac = factor_bivariate(p);
    CHECK(expand(fac) == p);
    for (const auto& [h, m] : fac.factors) CHECK(is_monic(h));
  }
}

TEST_CASE("factor_bivariate recovers products of distinct irreducibles") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 40) {
    Poly a = random_nonzero_poly(rng, 2, 2, 3, 4);
    Poly b = random_nonzero_poly(rng, 2, 2, 3, 4);
    if (a.is_constant() || b.is_constant() || a.total_degree() > 4 || b.total_degree() > 4) continue;
    auto fa = factor_bivariate(a), fb = factor_bivariate(b);
    if (fa.factors.size() != 1 || fb.factors.size() != 1) continue;
    if (fa.factors[0].second != 1 || fb.factors[0].second != 1) continue;
    if (fa.factors[0].first == fb.factors[0].first) continue;
    auto fab = factor_bivariate(a * b);
    REQUIRE(fab.factors.size() == 2);
    CHECK(has_factor(fab, a, 1));
    CHECK(has_factor(fab, b, 1));
    ++checked;
  }
}

/// Degrees d such that some sub-multiset of the image factors has total y-degree d.
std::set<int> split_degrees(const Poly& h, long x0) {
  std::set<int> sums{0};
  for (const auto& [g, m] : factor_univariate(substitute(h, kX, Rat(x0))).factors)
    for (int k = 0; k < m; ++k) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + g.degree(kY));
      sums = std::move(next);
    }
  return sums;
}

TEST_CASE("bivariate factors pass an independent irreducibility check") {
  // A factor of y-degree n that split as d + (n - d) would show d among the
  // achievable sub-sums at every good specialization point.
  std::mt19937_64 rng(5);
  Poly x = px(), y = py();
  std::vector<Poly> inputs{x * x + y * y, y * y - x, pow(y, 3) + x * y + 1,
                           (x * x + y * y) * (y * y - x * x * x - 1)};
  for (int i = 0; i < 20; ++i) inputs.push_back(random_nonzero_poly(rng, 2, 3, 4, 4));
  std::uniform_int_distribution<long> pick(3, 40);
  for (const auto& p : inputs) {
    if (p.is_constant()) continue;
    for (const auto& [h, m] : factor_bivariate(p).factors) {
      const int n = h.degree(kY);
      if (n < 2) continue;
      std::set<int> common;
      bool first = true;
      int points = 0;
      while (points < 3) {
        long x0 = pick(rng);
        Poly img = substitute(h, kX, Rat(x0));
        if (img.degree(kY) != n || !gcd(img, derivative(img, kY)).is_constant()) continue;
        auto s = split_degrees(h, x0);
        if (first) {
          common = s;
          first = false;
        } else {
          std::set<int> keep;
          for (int d : common)
            if (s.count(d)) keep.insert(d);
          common = std::move(keep);
        }
        ++points;
      }
      // Only 0 and n may survive for a genuinely irreducible factor; if a
      // proper split survives three points, confirm with more points.
      for (int tries = 0; tries < 20 && common.size() > 2; ++tries) {
        long x0 = pick(rng) + 40;
        Poly img = substitute(h, kX, Rat(x0));
        if (img.degree(kY) != n || !gcd(img, derivative(img, kY)).is_constant()) continue;
        auto s = split_degrees(h, x0);
        std::set<int> keep;
        for (int d : common)
          if (s.count(d)) keep.insert(d);
        common = std::move(keep);
      }
      CHECK(common == std::set<int>{0, n});
    }
  }
}
