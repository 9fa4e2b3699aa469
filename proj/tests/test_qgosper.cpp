#include <doctest.h>

#include <random>

#include "gosper_support.hpp"
#include "qsum/qgosper.hpp"

using namespace qsum;
using namespace qsum::testing;

TEST_CASE("shift_gcd_spectrum") {
  Poly x = px();
  QParam q(Rat(2));
  CHECK(shift_gcd_spectrum(x + 1, x + 1, 1, q) == std::vector<long>{0});
  Poly f = (x - 1) * (x - rat(1, 4));
  CHECK(shift_gcd_spectrum(f, scale_var(f, kX, Rat(2)), 1, q) == std::vector<long>{1});
  CHECK(shift_gcd_spectrum(x - 1, Rat(2) * x - 1, 1, q).empty());
  // m-fold: gcd(x - 2, x q^{2h} - 8) needs q^{2h} = 4.
  CHECK(shift_gcd_spectrum(x - 2, x - 8, 2, q) == std::vector<long>{1});
  CHECK(shift_gcd_spectrum(x - 2, x - 4, 2, q).empty());
  CHECK(shift_gcd_spectrum(x - 8, x - 2, 2, q).empty());
  CHECK_THROWS_AS(shift_gcd_spectrum(x, x * (x + 1), 1, q), std::domain_error);
}

TEST_CASE("m_fold_gosper examples") {
  Poly x = px();
  QParam q(Rat(2));
  auto t = m_fold_gosper(x + 1, 1, q);
  CHECK(monic(t.A) == x + 1);
  CHECK(t.B == monic(Rat(2) * x + 1));
  CHECK(t.C == Poly(1));
  CHECK(gosper_identity(x + 1, Rat(2) * x + 1, t, q));

  for (int m : {1, 2, 3}) {
    auto u = m_fold_gosper(x, m, q);
    CHECK(u.C == Poly(1));
    CHECK(RatFun(u.A, u.B) == RatFun(q.pow(-m)));
  }

  Poly b = (x - 1) * (x - rat(1, 4));
  auto v = m_fold_gosper(b, 1, q);
  CHECK(monic(v.A) == x - 1);
  CHECK(v.B == x - rat(1, 8));
  CHECK(v.C == x - rat(1, 2));
  CHECK(gosper_identity(b, scale_var(b, kX, Rat(2)), v, q));
  CHECK(v.A.leading_coeff() == q.pow(-(b.degree(kX) + v.C.degree(kX))));

  auto w = m_fold_gosper(Poly(3), 1, q);
  CHECK(w.A == Poly(1));
  CHECK(w.B == Poly(1));
}

TEST_CASE("m_fold_gosper on q-power chains") {
  std::mt19937_64 rng(41);
  for (Rat qv : {Rat(2), rat(3, 2), Rat(-2)}) {
    QParam q(qv);
    for (int i = 0; i < 40; ++i) {
      const int m = 1 + static_cast<int>(rng() % 3);
      Poly b = random_chain_poly(rng, q);
      Poly bm = scale_var(b, kX, q.pow(m));
      auto t = m_fold_gosper(b, m, q);
      CHECK(gosper_identity(b, bm, t, q));
      CHECK(is_monic(t.B));
      CHECK(is_monic(t.C));
      CHECK(t.A.degree(kX) == t.B.degree(kX));
      CHECK(t.A.low_degree(kX) == t.B.low_degree(kX));
      long bound = 0;
      const int k = b.low_degree(kX);
      for (long h : shift_gcd_spectrum(shift_exponent(b, kX, -k), shift_exponent(bm, kX, -k), m, q))
        bound = std::max(bound, h);
      CHECK(gosper_coprime(t, q, bound + 5));
      auto again = gosper_representation(t.A, t.B, m, q);
      CHECK(again.C == Poly(1));
    }
  }
}
