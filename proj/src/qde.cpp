#include "qsum/qde.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "linsolve.hpp"

namespace qsum {

namespace {

void validate(const QdeInstance& inst) {
  if (inst.m < 1) throw std::invalid_argument("m must be positive");
  if (inst.j < 1) throw std::invalid_argument("j must be positive");
  if (inst.lambda < 1) throw std::invalid_argument("lambda must be positive");
  if (inst.b.is_zero()) throw std::invalid_argument("b must be nonzero");
  if (inst.b.max_var() > kX) throw std::invalid_argument("b must be a polynomial in x");
  if (inst.a.max_var() > kY) throw std::invalid_argument("a must be a polynomial in x, y");
  if (inst.a.degree(kY) >= inst.lambda) throw std::invalid_argument("deg_y(a) must be below lambda");
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

RatFun LaurentXY::to_ratfun() const {
  if (terms.empty()) return RatFun();
  int low = 0;
  for (const auto& [e, c] : terms) low = std::min(low, e.first);
  Poly num;
  for (const auto& [e, c] : terms) {
    Exponents ex{};
    ex[kX] = e.first - low;
    ex[kY] = e.second;
    num.add_term(ex, c);
  }
  return RatFun(num, Poly::var(kX, -low));
}

std::pair<Poly, Poly> universal_denominator(const Poly& b, int m, const QParam& q) {
  GosperTriple t = m_fold_gosper(b, m, q);
  return {scale_var(t.B, kX, q.pow(-m)), b * t.C};
}

DegreeWindow degree_bounds(const QdeInstance& inst, const GosperTriple& t) {
  const long l0 = inst.b.degree(kX), l0p = inst.b.low_degree(kX);
  const long l1 = t.A.degree(kX), l1p = t.A.low_degree(kX);
  const long l2 = t.C.degree(kX), l2p = t.C.low_degree(kX);
  const long m = inst.m;
  const long vj = inst.v * inst.j;
  const long vjn = vj + static_cast<long>(inst.n) * (inst.lambda - 1);
  DegreeWindow w;
  w.high = std::max(floor_div((l0 - l1 + l2) * m + vj, m), floor_div((l0 - l1 + l2) * m + vjn, m));
  w.low = std::min(ceil_div((l0p - l1p + l2p) * m + vj, m), ceil_div((l0p - l1p + l2p) * m + vjn, m));
  if (!inst.a.is_zero()) {
    w.high = std::max(w.high, l2 + inst.a.degree(kX) - l1);
    w.low = std::min(w.low, l2p + inst.a.low_degree(kX) - l1p);
  }
  return w;
}

std::optional<LaurentXY> solve_laurent(const QdeInstance& inst, const QParam& q, int widen) {
  validate(inst);
  if (inst.a.is_zero()) return LaurentXY{};
  const GosperTriple t = m_fold_gosper(inst.b, inst.m, q);
  DegreeWindow w = degree_bounds(inst, t);
  w.low -= widen;
  w.high += widen;
  if (w.empty()) return std::nullopt;

  const Poly bp = scale_var(t.B, kX, q.pow(-inst.m));
  const auto a_by_y = coeffs_in(inst.a, kY);
  const std::size_t ncols = static_cast<std::size_t>(w.high - w.low + 1);
  LaurentXY out;
  for (int i = 0; i < inst.lambda; ++i) {
    const Poly ai = i < static_cast<int>(a_by_y.size()) ? a_by_y[static_cast<std::size_t>(i)] : Poly();
    if (ai.is_zero()) continue;
    // Column k holds the coefficients of (q^{mk - n i - v j} A - B(x q^{-m})) x^k.
    std::map<long, std::vector<Rat>> rows;
    for (long k = w.low; k <= w.high; ++k) {
      const Poly col = q.pow(inst.m * k - static_cast<long>(inst.n) * i - inst.v * inst.j) * t.A - bp;
      for (const auto& [e, c] : col.terms()) {
        auto& row = rows.try_emplace(e[kX] + k, ncols, Rat(0)).first->second;
        row[static_cast<std::size_t>(k - w.low)] = c;
      }
    }
    const Poly rhs = ai * t.C;
    for (const auto& [e, c] : rhs.terms()) rows.try_emplace(e[kX], ncols, Rat(0));
    std::vector<std::vector<Rat>> mat;
    std::vector<Rat> vec;
    for (auto& [e, row] : rows) {
      Exponents ex{};
      ex[kX] = static_cast<int>(e);
      mat.push_back(std::move(row));
      vec.push_back(e >= 0 ? rhs.coeff(ex) : Rat(0));
    }
    auto sol = detail::solve_linear_system(std::move(mat), std::move(vec));
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < ncols; ++k)
      if ((*sol)[k] != 0) out.terms[{static_cast<int>(w.low + static_cast<long>(k)), i}] = (*sol)[k];
  }
  return out;
}

std::optional<RatFun> solve_qde(const QdeInstance& inst, const QParam& q, int widen) {
  auto p_hat = solve_laurent(inst, q, widen);
  if (!p_hat) return std::nullopt;
  if (p_hat->terms.empty()) return RatFun();
  auto [num, den] = universal_denominator(inst.b, inst.m, q);
  return p_hat->to_ratfun() * RatFun(num, den);
}

bool satisfies_qde(const QdeInstance& inst, const RatFun& p, const QParam& q) {
  ShiftMonomial s;
  s.exps[kX] = inst.m;
  s.exps[kY] = -inst.n;
  const RatFun lhs = RatFun(inst.a, inst.b);
  const RatFun rhs = q.pow(-inst.v * inst.j) * apply_shift(p, s, q) - p;
  return lhs == rhs;
}

}  // namespace qsum
