#pragma once

#include <optional>
#include <vector>

#include "qsum/lattice.hpp"
#include "qsum/poly.hpp"
#include "qsum/ratfun.hpp"

namespace qsum {

/// Solutions (v, l_1, ..., l_n) of f == q^v tau_1^{l_1} ... tau_n^{l_n} g, as
/// an affine lattice. Coordinates are ordered power of q first, then one shift
/// exponent per variable.
using QDispSet = LatticeCoset;

QDispSet q_dispersion(const Poly& f, const Poly& g, const QParam& q, int nvars = 2);

/// tau_x^t d == q^v tau_y^ell d with t > 0 minimal. In dispersion coordinates
/// this is the lattice element (v, -t, ell) of qDisp(d, d).
struct StabilizerWitness {
  long t = 0;
  long ell = 0;
  long v = 0;
  friend bool operator==(const StabilizerWitness&, const StabilizerWitness&) = default;
};

/// Throws std::logic_error when the stabilizer has rank > 1, which cannot
/// happen for an irreducible d of positive y-degree.
std::optional<StabilizerWitness> stabilizer_min_t(const Poly& d, const QParam& q);

/// (ell, v) with d2 == q^v tau_var^ell d, if one exists.
struct VarShift {
  long ell = 0;
  long v = 0;
  friend bool operator==(const VarShift&, const VarShift&) = default;
};
std::optional<VarShift> tau_equivalent_in_var(const Poly& d, const Poly& d2, int var,
                                              const QParam& q);

enum class ShiftGroup { TauX, TauY, TauXY };

/// member == apply_shift(representative, sigma).
struct OrbitMember {
  Poly poly;
  ShiftMonomial sigma;
};

struct OrbitWitness {
  Poly representative;
  std::vector<OrbitMember> members;
};

/// sigma with member == apply_shift(rep, sigma) and sigma inside the group.
std::optional<ShiftMonomial> shift_relation(const Poly& member, const Poly& rep, ShiftGroup group,
                                            const QParam& q);

/// Classes of q-shift equivalence, in order of first appearance. For a
/// single-operator group the representative is the member with the smallest
/// shift exponent, so every other member is a nonnegative shift of it; for
/// the full group it is the least member under compare_canonical.
std::vector<OrbitWitness> orbit_partition(const std::vector<Poly>& polys, ShiftGroup group,
                                          const QParam& q);

}  // namespace qsum
