#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsum/partial_fractions.hpp"
#include "qsum/qshift.hpp"
#include "qsum/ratfun.hpp"

namespace qsum {

/// f == tau_x g - g + tau_y h - h.
struct Certificate {
  RatFun g;
  RatFun h;
};

enum class ObstructionKind { NonzeroMu, NonzeroResidue, NoShiftRelation, QdeUnsolvable };

std::string to_string(ObstructionKind kind);

/// Why a function is not summable. Which fields are meaningful depends on the
/// kind: residue holds mu for NonzeroMu and the residue for NonzeroResidue;
/// relation is set for QdeUnsolvable.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::NonzeroMu;
  Poly d;
  int j = 0;
  RatFun residue;
  std::optional<StabilizerWitness> relation;
};

class SummabilityResult {
 public:
  SummabilityResult(Certificate c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  SummabilityResult(Obstruction o) : v_(std::move(o)) {}  // NOLINT(google-explicit-constructor)

  bool summable() const { return std::holds_alternative<Certificate>(v_); }
  const Certificate& certificate() const { return std::get<Certificate>(v_); }
  const Obstruction& obstruction() const { return std::get<Obstruction>(v_); }

 private:
  std::variant<Certificate, Obstruction> v_;
};

/// c var^n / (q^n - 1), an antidifference of c var^n when c is free of var.
RatFun monomial_antidifference(const RatFun& c, int n, int var, const QParam& q);

/// G with tau^shift w - w == tau G - G.
RatFun telescoper(const RatFun& w, int shift, int var, const QParam& q);

/// Moves a / (tau^ell d)^j onto d^j: the term equals
/// tau g - g + reduced / d^j.
struct OrbitReduction {
  RatFun g;
  RatFun reduced;
};
OrbitReduction orbit_reduce(const RatFun& a, const Poly& d, int j, int ell, int var,
                            const QParam& q);

struct ResidueEntry {
  Poly d;
  int j = 1;
  RatFun residue;
};

/// f == tau g - g + mu + sum residue / d^j over orbit-distinct d.
struct QResidues {
  std::vector<ResidueEntry> table;
  RatFun g;
  RatFun mu;
};

QResidues q_residues(const RatFun& f, int var, const QParam& q);

/// Summability with respect to tau_var alone; the certificate is carried in
/// g for var == x and in h for var == y.
SummabilityResult univariate_summable(const RatFun& f, int var, const QParam& q);

/// f == tau_x g - g + tau_y h - h + mu + sum a / d^j with the d pairwise
/// inequivalent under <tau_x, tau_y>.
struct BivariateReduction {
  RatFun g;
  RatFun h;
  RatFun mu;
  std::vector<FractionTerm> terms;
  RatFun remainder() const;
};

BivariateReduction bivariate_reduce(const RatFun& f, const QParam& q);

/// Decides summability of a / d^j for irreducible d with positive y-degree.
SummabilityResult fraction_summable(const RatFun& a, const Poly& d, int j, const QParam& q);

SummabilityResult bivariate_summable(const RatFun& f, const QParam& q);

/// Exact check of f == tau_x g - g + tau_y h - h.
bool verify_certificate(const RatFun& f, const Certificate& cert, const QParam& q);

}  // namespace qsum
