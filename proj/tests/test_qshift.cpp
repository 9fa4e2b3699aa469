#include <doctest.h>

#include <random>

#include "qsum/lattice.hpp"
#include "qsum/qshift.hpp"
#include "test_support.hpp"

using namespace qsum;
using namespace qsum::testing;

namespace {

Poly shifted(const Poly& p, const IntVector& z, const QParam& q) {
  ShiftMonomial s;
  s.vpow = z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s.exps[i - 1] = static_cast<int>(z[i]);
  return apply_shift(p, s, q);
}

}  // namespace

TEST_CASE("diophantine_solve") {
  // l + l1 = 0, l + l2 = 0, l + 1 = 0
  auto a = diophantine_solve({{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}, {0, 0, -1}, 3);
  REQUIRE_FALSE(a.empty);
  CHECK(a.particular == IntVector{-1, 1, 1});
  CHECK(a.basis.empty());

  auto b = diophantine_solve({{0, 2, -2}}, {0}, 3);
  REQUIRE_FALSE(b.empty);
  CHECK(b.particular == IntVector{0, 0, 0});
  CHECK(b.basis == std::vector<IntVector>{{1, 0, 0}, {0, 1, 1}});

  CHECK(diophantine_solve({{0, 0}}, {1}, 2).empty);
  CHECK(diophantine_solve({{2, 4}}, {3}, 2).empty);
}

TEST_CASE("diophantine_solve agrees with brute force") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t rows = 1 + rng() % 3;
    std::vector<IntVector> m(rows, IntVector(3));
    IntVector rhs(rows);
    for (auto& r : m)
      for (auto& e : r) e = c(rng);
    for (auto& e : rhs) e = c(rng);
    auto sol = diophantine_solve(m, rhs, 3);
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        for (long d = -4; d <= 4; ++d) {
          bool ok = true;
          for (std::size_t i = 0; i < rows; ++i)
            ok = ok && m[i][0] * a + m[i][1] * b + m[i][2] * d == rhs[i];
          CHECK(sol.contains({a, b, d}) == ok);
        }
  }
}

TEST_CASE("hermite_normal_form is canonical") {
  auto h1 = hermite_normal_form({{2, -1, -1}, {4, -2, -2}}, 3);
  auto h2 = hermite_normal_form({{-2, 1, 1}}, 3);
  CHECK(h1 == h2);
  CHECK(h1 == std::vector<IntVector>{{2, -1, -1}});
  auto h3 = hermite_normal_form({{3, 0}, {1, 2}}, 2);
  CHECK(h3 == std::vector<IntVector>{{1, 2}, {0, 6}});
}

TEST_CASE("q_dispersion examples") {
  Poly x = px(), y = py();
  QParam q(Rat(2));
  auto a = q_dispersion(x + y + 1, x + y + Rat(2), q);
  REQUIRE_FALSE(a.empty);
  CHECK(a.particular == IntVector{-1, 1, 1});
  CHECK(a.basis.empty());

  for (int n : {2, 3}) {
    Poly d = pow(x, n) + pow(y, n);
    auto l = q_dispersion(d, d, q);
    REQUIRE_FALSE(l.empty);
    CHECK(l.particular == IntVector{0, 0, 0});
    CHECK(l.basis == hermite_normal_form({{-n, 1, 1}}, 3));
  }
  CHECK(q_dispersion(x, y, q).empty);
  CHECK(q_dispersion(x + 1, x + 3, q).empty);
}

TEST_CASE("q_dispersion membership soundness") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> e(-2, 2);
  for (Rat qv : {Rat(2), rat(3, 2), Rat(-2)}) {
    QParam q(qv);
    for (int i = 0; i < 40; ++i) {
      Poly g = random_nonzero_poly(rng, 2, 2, 3);
      IntVector z{e(rng), e(rng), e(rng)};
      Poly f = shifted(g, z, q);
      auto lat = q_dispersion(f, g, q);
      REQUIRE_FALSE(lat.empty);
      CHECK(lat.contains(z));
      CHECK(shifted(g, lat.particular, q) == f);
      for (const auto& b : lat.basis) {
        IntVector plus = lat.particular, minus = lat.particular;
        for (std::size_t k = 0; k < 3; ++k) {
          plus[k] += b[k];
          minus[k] -= b[k];
        }
        CHECK(shifted(g, plus, q) == f);
        CHECK(shifted(g, minus, q) == f);
      }
      auto self = q_dispersion(g, g, q);
      CHECK(self.particular == IntVector{0, 0, 0});
    }
  }
}

TEST_CASE("stabilizer_min_t") {
  Poly x = px(), y = py();
  QParam q(Rat(2));
  CHECK(stabilizer_min_t(x * x + y * y, q) == StabilizerWitness{1, -1, 2});
  CHECK(stabilizer_min_t(x + y, q) == StabilizerWitness{1, -1, 1});
  for (Rat qv : {Rat(2), rat(3, 2), Rat(-5)})
    CHECK(stabilizer_min_t(x * y + 1, QParam(qv)) == StabilizerWitness{1, 1, 0});
  CHECK_FALSE(stabilizer_min_t(x + y + 1, q).has_value());
  // x^2 + y^3: tau_x^3 d = q^6 tau_y^-2 d, and no smaller t works.
  auto w = stabilizer_min_t(x * x + pow(y, 3), q);
  REQUIRE(w.has_value());
  CHECK(*w == StabilizerWitness{3, -2, 6});
}

TEST_CASE("stabilizer_min_t is minimal and correct") {
  Poly x = px(), y = py();
  QParam q(rat(3, 2));
  for (const Poly& d : {x * x + y * y, pow(x, 4) + pow(y, 6), x * x * y + 1, pow(x, 2) * y + pow(y, 3)}) {
    auto w = stabilizer_min_t(d, q);
    REQUIRE(w.has_value());
    CHECK(tau(d, kX, static_cast<int>(w->t), q) ==
          q.pow(w->v) * tau(d, kY, static_cast<int>(w->ell), q));
    auto lat = q_dispersion(d, d, q);
    for (long t = 1; t < w->t; ++t)
      for (long l = -10; l <= 10; ++l)
        for (long v = -30; v <= 30; ++v) CHECK_FALSE(lat.contains({v, -t, l}));
  }
}

TEST_CASE("tau_equivalent_in_var") {
  Poly x = px(), y = py();
  QParam q(Rat(2));
  CHECK(tau_equivalent_in_var(y + x, y + Rat(4) * x, kY, q) == VarShift{-2, 2});
  CHECK(tau_equivalent_in_var(y + x, y + x, kY, q) == VarShift{0, 0});
  CHECK_FALSE(tau_equivalent_in_var(y + x, y + x + 1, kY, q).has_value());
  // Related under tau_x but not under tau_y alone.
  CHECK_FALSE(tau_equivalent_in_var(x * y + 1, x * y + 1 + x, kY, q).has_value());
}

TEST_CASE("orbit_partition") {
  Poly x = px(), y = py();
  QParam q(Rat(2));
  auto a = orbit_partition({x + y, Rat(2) * x + y}, ShiftGroup::TauXY, q);
  REQUIRE(a.size() == 1);
  CHECK(a[0].members.size() == 2);
  for (const auto& m : a[0].members) CHECK(apply_shift(a[0].representative, m.sigma, q) == m.poly);

  CHECK(orbit_partition({x + y, x + 1}, ShiftGroup::TauXY, q).size() == 2);

  auto c = orbit_partition({x * x + y * y}, ShiftGroup::TauXY, q);
  REQUIRE(c.size() == 1);
  CHECK(c[0].members[0].sigma == ShiftMonomial{});

  // Single-operator groups pick the least shifted member.
  auto d = orbit_partition({y + Rat(4) * x, y + x, Rat(8) * x + y}, ShiftGroup::TauY, q);
  REQUIRE(d.size() == 1);
  for (const auto& m : d[0].members) {
    CHECK(m.sigma.exps[kY] >= 0);
    CHECK(m.sigma.exps[kX] == 0);
    CHECK(apply_shift(d[0].representative, m.sigma, q) == m.poly);
  }
}

TEST_CASE("orbit_partition does not depend on input order") {
  Poly x = px(), y = py();
  QParam q(rat(3, 2));
  std::vector<Poly> base{x + y, x * x + y * y, x * y + 1, x + Rat(2) * y + 1};
  std::vector<Poly> polys;
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int i = 0; i < 12; ++i) {
    ShiftMonomial s;
    s.exps[kX] = e(rng);
    s.exps[kY] = e(rng);
    polys.push_back(monic(apply_shift(base[static_cast<std::size_t>(i) % base.size()], s, q)));
  }
  auto summarize = [&](const std::vector<OrbitWitness>& cls) {
    std::vector<std::pair<std::size_t, Poly>> out;
    for (const auto& c : cls) out.emplace_back(c.members.size(), c.representative);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : compare_canonical(a.second, b.second) < 0;
    });
    return out;
  };
  auto ref = summarize(orbit_partition(polys, ShiftGroup::TauXY, q));
  CHECK(ref.size() == 4);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(polys.begin(), polys.end(), rng);
    CHECK(summarize(orbit_partition(polys, ShiftGroup::TauXY, q)) == ref);
  }
}
