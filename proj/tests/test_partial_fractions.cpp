#include <doctest.h>

#include <random>

#include "qsum/partial_fractions.hpp"
#include "summability_support.hpp"

using namespace qsum;
using namespace qsum::testing;

TEST_CASE("partial_fractions examples") {
  Poly x = px(), y = py();
  QParam q(Rat(2));
  auto a = partial_fractions(RatFun(Poly(1), y * (x + y)), kY, q);
  REQUIRE(a.monomials.size() == 1);
  CHECK(a.monomials[0].first == -1);
  CHECK(a.monomials[0].second == RatFun(Poly(1), x));
  REQUIRE(a.terms.size() == 1);
  CHECK(a.terms[0].d == x + y);
  CHECK(a.terms[0].j == 1);
  CHECK(a.terms[0].a == RatFun(Poly(-1), x));

  auto c = partial_fractions(RatFun(y * y + 3), kY, q);
  CHECK(c.mu == RatFun(3));
  REQUIRE(c.monomials.size() == 1);
  CHECK(c.monomials[0].first == 2);
  CHECK(c.terms.empty());
}

TEST_CASE("partial_fractions of the worked three-term example") {
  Poly x = px(), y = py();
  QParam q(Rat(2));
  const Poly d = x * x + y * y;
  const RatFun f = RatFun(y, Rat(4) * x * apply_shift(d, [] {
                     ShiftMonomial s;
                     s.exps[kX] = 1;
                     s.exps[kY] = -1;
                     return s;
                   }(), q)) +
                   RatFun(Poly(1), d) + RatFun(Poly(1), (x + y) * (x + 1));
  auto p = partial_fractions(f, kY, q);
  CHECK(p.terms.size() == 3);
  CHECK(reconstruct(p, q) == f);
  for (const auto& t : p.terms) {
    CHECK(t.ell == 0);
    CHECK(t.a.num().degree(kY) < t.d.degree(kY));
    CHECK_FALSE(t.a.den().uses(kY));
  }
}

TEST_CASE("partial_fractions reconstructs random inputs") {
  std::mt19937_64 rng(101);
  for (Rat qv : {Rat(2), rat(3, 2)}) {
    QParam q(qv);
    for (int i = 0; i < 30; ++i) {
      RatFun f = random_shift_ratfun(rng, q);
      if (rng() % 3 == 0) f = f / RatFun(Poly::var(kY, 1 + static_cast<int>(rng() % 2)));
      for (int var : {kX, kY})
        for (auto grouping : {PfdGrouping::Plain, PfdGrouping::ByOrbit}) {
          auto p = partial_fractions(f, var, q, grouping);
          CHECK(reconstruct(p, q) == f);
          CHECK_FALSE(p.mu.uses(var));
          for (const auto& t : p.terms) {
            CHECK(t.ell >= 0);
            CHECK(is_monic(t.d));
            CHECK(t.a.num().degree(var) < t.d.degree(var));
          }
          if (grouping == PfdGrouping::ByOrbit) {
            std::vector<Poly> reps;
            for (const auto& t : p.terms)
              if (std::find(reps.begin(), reps.end(), t.d) == reps.end()) reps.push_back(t.d);
            for (std::size_t a = 0; a < reps.size(); ++a)
              for (std::size_t b = a + 1; b < reps.size(); ++b)
                CHECK_FALSE(tau_equivalent_in_var(reps[a], reps[b], var, q).has_value());
          }
        }
    }
  }
}
