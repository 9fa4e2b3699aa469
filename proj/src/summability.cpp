#include "qsum/summability.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsum/qde.hpp"

namespace qsum {

std::string to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::NonzeroMu: return "NonzeroMu";
    case ObstructionKind::NonzeroResidue: return "NonzeroResidue";
    case ObstructionKind::NoShiftRelation: return "NoShiftRelation";
    case ObstructionKind::QdeUnsolvable: return "QdeUnsolvable";
  }
  return "unknown";
}

RatFun monomial_antidifference(const RatFun& c, int n, int var, const QParam& q) {
  if (n == 0) throw std::domain_error("a nonzero constant has no antidifference");
  const RatFun power = n > 0 ? RatFun(Poly::var(var, n)) : RatFun(Poly(1), Poly::var(var, -n));
  return c * power / RatFun(q.pow(n) - 1);
}

RatFun telescoper(const RatFun& w, int shift, int var, const QParam& q) {
  RatFun g;
  if (shift >= 0) {
    for (int i = 0; i < shift; ++i) g += tau(w, var, i, q);
  } else {
    for (int i = 0; i < -shift; ++i) g -= tau(w, var, shift + i, q);
  }
  return g;
}

OrbitReduction orbit_reduce(const RatFun& a, const Poly& d, int j, int ell, int var,
                            const QParam& q) {
  const RatFun reduced = tau(a, var, -ell, q);
  const RatFun u = reduced / RatFun(pow(d, static_cast<unsigned>(j)));
  return {telescoper(u, ell, var, q), reduced};
}

QResidues q_residues(const RatFun& f, int var, const QParam& q) {
  QResidues out;
  const PFDecomp pfd = partial_fractions(f, var, q, PfdGrouping::ByOrbit);
  out.mu = pfd.mu;
  for (const auto& [n, c] : pfd.monomials) out.g += monomial_antidifference(c, n, var, q);
  for (const auto& t : pfd.terms) {
    OrbitReduction r = orbit_reduce(t.a, t.d, t.j, t.ell, var, q);
    out.g += r.g;
    auto it = std::find_if(out.table.begin(), out.table.end(),
                           [&](const ResidueEntry& e) { return e.d == t.d && e.j == t.j; });
    if (it == out.table.end())
      out.table.push_back({t.d, t.j, r.reduced});
    else
      it->residue += r.reduced;
  }
  return out;
}

SummabilityResult univariate_summable(const RatFun& f, int var, const QParam& q) {
  QResidues r = q_residues(f, var, q);
  if (!r.mu.is_zero()) return Obstruction{ObstructionKind::NonzeroMu, Poly(), 0, r.mu, {}};
  for (const auto& e : r.table)
    if (!e.residue.is_zero())
      return Obstruction{ObstructionKind::NonzeroResidue, e.d, e.j, e.residue, {}};
  if (var == kX) return Certificate{r.g, RatFun()};
  return Certificate{RatFun(), r.g};
}

RatFun BivariateReduction::remainder() const {
  RatFun r = mu;
  for (const auto& t : terms) r += t.a / RatFun(pow(t.d, static_cast<unsigned>(t.j)));
  return r;
}

BivariateReduction bivariate_reduce(const RatFun& f, const QParam& q) {
  BivariateReduction out;
  const PFDecomp pfd = partial_fractions(f, kY, q, PfdGrouping::Plain);
  out.mu = pfd.mu;
  for (const auto& [n, c] : pfd.monomials) out.h += monomial_antidifference(c, n, kY, q);

  std::vector<Poly> ds;
  for (const auto& t : pfd.terms)
    if (std::find(ds.begin(), ds.end(), t.d) == ds.end()) ds.push_back(t.d);
  for (const auto& cls : orbit_partition(ds, ShiftGroup::TauXY, q)) {
    const Poly& rep = cls.representative;
    for (const auto& m : cls.members)
      for (const auto& t : pfd.terms) {
        if (!(t.d == m.poly)) continue;
        // t.a / d^j with d == q^w tau_x^s tau_y^s' rep.
        const int s = m.sigma.exps[kX], sp = m.sigma.exps[kY];
        const RatFun a = q.pow(-m.sigma.vpow * t.j) * t.a;
        const Poly rep_j = pow(rep, static_cast<unsigned>(t.j));
        // x-step: a / tau_x^s (tau_y^s' rep^j) == tau_x^s u1.
        const RatFun ax = tau(a, kX, -s, q);
        out.g += telescoper(ax / RatFun(tau(rep_j, kY, sp, q)), s, kX, q);
        // y-step: ax / tau_y^s' rep^j == tau_y^s' u2.
        const RatFun axy = tau(ax, kY, -sp, q);
        out.h += telescoper(axy / RatFun(rep_j), sp, kY, q);
        auto it = std::find_if(out.terms.begin(), out.terms.end(),
                               [&](const FractionTerm& e) { return e.d == rep && e.j == t.j; });
        if (it == out.terms.end())
          out.terms.push_back({rep, t.j, 0, axy});
        else
          it->a += axy;
      }
  }
  std::erase_if(out.terms, [](const FractionTerm& t) { return t.a.is_zero(); });
  return out;
}

SummabilityResult fraction_summable(const RatFun& a, const Poly& d, int j, const QParam& q) {
  if (a.is_zero()) throw std::domain_error("fraction numerator must be nonzero");
  if (j < 1) throw std::domain_error("multiplicity must be positive");
  if (d.max_var() > kY || d.degree(kY) < 1 || d == Poly::var(kY) || !is_monic(d))
    throw std::domain_error("denominator must be monic with positive y-degree and differ from y");
  if (a.den().uses(kY) || a.num().degree(kY) >= d.degree(kY))
    throw std::domain_error("numerator must be a y-polynomial of lower degree than d");

  const auto rel = stabilizer_min_t(d, q);
  if (!rel) return Obstruction{ObstructionKind::NoShiftRelation, d, j, RatFun(), {}};
  // tau_x^t d == q^v tau_y^ell d, so the equation is
  // a / b == q^{-v j} tau_x^t tau_y^{-ell} p - p.
  QdeInstance inst{a.num(), a.den(), static_cast<int>(rel->t), static_cast<int>(rel->ell), rel->v, j,
                   d.degree(kY)};
  const auto p = solve_qde(inst, q);
  if (!p) return Obstruction{ObstructionKind::QdeUnsolvable, d, j, RatFun(), rel};

  const RatFun base = *p / RatFun(pow(d, static_cast<unsigned>(j)));
  Certificate cert;
  for (long k = 0; k < rel->t; ++k) cert.g += tau(base, kX, static_cast<int>(k), q);
  const RatFun w = tau(base, kX, static_cast<int>(rel->t), q);
  cert.h = telescoper(w, static_cast<int>(-rel->ell), kY, q);
  return cert;
}

SummabilityResult bivariate_summable(const RatFun& f, const QParam& q) {
  BivariateReduction red = bivariate_reduce(f, q);
  Certificate cert{red.g, red.h};
  if (!red.mu.is_zero()) {
    SummabilityResult mu = univariate_summable(red.mu, kX, q);
    if (!mu.summable()) return Obstruction{ObstructionKind::NonzeroMu, Poly(), 0, red.mu, {}};
    cert.g += mu.certificate().g;
  }
  for (const auto& t : red.terms) {
    SummabilityResult r = fraction_summable(t.a, t.d, t.j, q);
    if (!r.summable()) return r;
    cert.g += r.certificate().g;
    cert.h += r.certificate().h;
  }
  if (!verify_certificate(f, cert, q))
    throw std::logic_error("internal error: constructed certificate does not verify");
  return cert;
}

}  // namespace qsum
