#include <doctest.h>

#include <random>

#include "qsum/poly.hpp"
#include "qsum/ratfun.hpp"
#include "test_support.hpp"

using namespace qsum;
using namespace qsum::testing;

TEST_CASE("rational helpers") {
  CHECK(pow(rat(2, 3), 3) == rat(8, 27));
  CHECK(pow(rat(2, 3), -2) == rat(9, 4));
  CHECK(pow(rat(-5), 0) == 1);
  CHECK(parse_rat("1.25") == rat(5, 4));
  CHECK(parse_rat("-4/6") == rat(-2, 3));
  CHECK(to_string(rat(-4, 3)) == "-4/3");
}

TEST_CASE("QParam rejects roots of unity") {
  CHECK_THROWS_WITH_AS(QParam(Rat(0)), "q must be a rational other than 0, 1, -1",
                       std::invalid_argument);
  CHECK_THROWS_AS(QParam(Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(QParam(Rat(-1)), std::invalid_argument);
  CHECK_NOTHROW(QParam(rat(3, 2)));
}

TEST_CASE("q_log") {
  CHECK(q_log(rat(4, 9), QParam(rat(2, 3))) == 2);
  CHECK(q_log(Rat(1), QParam(Rat(7))) == 0);
  CHECK_FALSE(q_log(Rat(5), QParam(Rat(2))).has_value());
  CHECK_THROWS_AS(q_log(Rat(0), QParam(Rat(2))), std::domain_error);
  CHECK_FALSE(q_log(Rat(-4), QParam(Rat(2))).has_value());
  for (Rat base : {Rat(2), rat(3, 2), Rat(-2), rat(-1, 5)}) {
    QParam q(base);
    for (long m = -64; m <= 64; ++m) CHECK(q_log(q.pow(m), q) == m);
  }
}

TEST_CASE("ratfun_normalize") {
  Poly x = px(), y = py();
  RatFun a = ratfun_normalize(x * x - y * y, x - y);
  CHECK(a.num() == x + y);
  CHECK(a.den() == Poly(1));
  RatFun b = ratfun_normalize(Rat(2) * x + Rat(2) * y, Poly(2));
  CHECK(b.num() == x + y);
  RatFun c = ratfun_normalize(x + y, Rat(3) * y + Rat(3) * x);
  CHECK(c.num() == Poly(rat(1, 3)));
  CHECK(c.den() == Poly(1));
  CHECK_THROWS_AS(ratfun_normalize(x, Poly()), std::domain_error);
}

TEST_CASE("ratfun_normalize is idempotent and value preserving") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Poly common = random_nonzero_poly(rng, 2, 2, 3);
    Poly n = random_poly(rng, 2, 2, 3) * common;
    Poly d = random_nonzero_poly(rng, 2, 2, 3) * common;
    RatFun f = ratfun_normalize(n, d);
    CHECK(f.num() * d == n * f.den());
    CHECK(ratfun_normalize(f.num(), f.den()) == f);
    if (!f.is_zero()) CHECK(is_monic(f.den()));
  }
}

TEST_CASE("gcd") {
  Poly x = px(), y = py();
  CHECK(gcd(pow(x + y, 2) * (x + 1), (x + y) * (x - 1)) == x + y);
  CHECK(gcd(x + y, x + Rat(2) * y) == Poly(1));
  CHECK(gcd(Poly(), x * x + y * y) == x * x + y * y);
  CHECK(gcd(Poly(), Poly()).is_zero());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Poly g = random_nonzero_poly(rng, 2, 2, 3);
    Poly a = random_nonzero_poly(rng, 2, 2, 3) * g;
    Poly b = random_nonzero_poly(rng, 2, 2, 3) * g;
    Poly h = gcd(a, b);
    CHECK(divide_exact(a, h).has_value());
    CHECK(divide_exact(b, h).has_value());
    CHECK(divide_exact(h, monic(g)).has_value());
  }
}

TEST_CASE("gcd with large coefficients and known cofactors") {
  Poly x = px(), y = py();
  std::mt19937_64 rng(8);
  const Rat big = pow(Rat(3, 2), 40);
  for (int i = 0; i < 40; ++i) {
    const Rat k = Rat(static_cast<long>(rng() % 7) + 1);
    Poly g = random_nonzero_poly(rng, 3, 3, 4, 50) * (x + k);
    Poly a = g * (x + y * k + 1) * big;
    Poly b = g * (x * y - k) * (x * x + 1) / big;
    CHECK(gcd(a, b) == monic(g));
    CHECK(gcd(b, a) == monic(g));
  }
  CHECK(gcd(x * x - 4, x * x + x - 6) == x - 2);
  CHECK(gcd(y * y - 4, Rat(3) * y - 6) == y - 2);
}

TEST_CASE("resultant") {
  Poly x = px(), y = py();
  CHECK(resultant(y + x, -y + x, kY) == Rat(2) * x);
  CHECK(resultant(y - x, y - x, kY).is_zero());
  CHECK(resultant(x - 1, x - 2, kX) == Poly(-1));
  // Vanishes exactly where a common root exists.
  Poly r = resultant(y * y - x, y - 2, kY);
  CHECK(r == Poly(4) - x);
}

TEST_CASE("apply_shift") {
  Poly x = px(), y = py();
  QParam q2(Rat(2));
  CHECK(apply_shift(x + y, ShiftMonomial::tau(kX), q2) == Rat(2) * x + y);
  QParam q5(Rat(5));
  CHECK(apply_shift(y * y, ShiftMonomial::tau(kY), q5) == Rat(25) * y * y);
  ShiftMonomial s;
  s.vpow = 1;
  s.exps[kX] = 1;
  s.exps[kY] = -1;
  CHECK(apply_shift(x * x + y * y, s, q2) == Rat(8) * x * x + rat(1, 2) * y * y);
}

TEST_CASE("apply_shift is a group action") {
  std::mt19937_64 rng(3);
  QParam q(rat(3, 2));
  std::uniform_int_distribution<int> e(-3, 3);
  for (int i = 0; i < 40; ++i) {
    RatFun f(random_poly(rng, 3, 3, 4), random_nonzero_poly(rng, 2, 2, 3));
    ShiftMonomial s, t;
    s.vpow = e(rng);
    s.exps[kX] = e(rng);
    s.exps[kY] = e(rng);
    t.vpow = e(rng);
    t.exps[kX] = e(rng);
    t.exps[kY] = e(rng);
    CHECK(apply_shift(apply_shift(f, s, q), t, q) == apply_shift(f, compose(s, t), q));
    CHECK(apply_shift(apply_shift(f, s, q), s.inverse(), q) == f);
  }
}

TEST_CASE("ratfun field operations") {
  Poly x = px(), y = py();
  RatFun a(Poly(1), x + y), b(Poly(1), x - y);
  RatFun s = a + b;
  CHECK(s == RatFun(Rat(2) * x, x * x - y * y));
  CHECK(s - b == a);
  CHECK((a * b) / b == a);
  CHECK(a - a == RatFun());
  CHECK(pow(a, -2) == RatFun(pow(x + y, 2)));
}
