#include "qsum/qshift.hpp"

#include <algorithm>
#include <numeric>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace qsum {

namespace {

/// Dispersion with some shift coordinates pinned to zero.
QDispSet restricted_dispersion(const Poly& f, const Poly& g, const QParam& q, int nvars,
                               const std::vector<bool>& free_var) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("q-dispersion of zero");
  const std::size_t ncols = static_cast<std::size_t>(nvars) + 1;
  if (f.size() != g.size()) return {};
  std::vector<IntVector> rows;
  IntVector rhs;
  auto it = f.terms().begin();
  for (const auto& [e, b] : g.terms()) {
    const auto& [ef, a] = *it++;
    if (ef != e) return {};
    // a x^e == q^v * b * q^{sum l_i e_i} x^e
    auto k = q_log(a / b, q);
    if (!k) return {};
    IntVector row(ncols, 0);
    row[0] = 1;
    for (int i = 0; i < nvars; ++i) row[static_cast<std::size_t>(i) + 1] = e[i];
    rows.push_back(std::move(row));
    rhs.push_back(*k);
  }
  for (int i = 0; i < nvars; ++i) {
    if (free_var[static_cast<std::size_t>(i)]) continue;
    IntVector row(ncols, 0);
    row[static_cast<std::size_t>(i) + 1] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  return diophantine_solve(rows, rhs, ncols);
}

std::vector<bool> group_vars(ShiftGroup group) {
  switch (group) {
    case ShiftGroup::TauX: return {true, false};
    case ShiftGroup::TauY: return {false, true};
    case ShiftGroup::TauXY: return {true, true};
  }
  return {};
}

ShiftMonomial to_shift(const IntVector& z) {
  ShiftMonomial s;
  s.vpow = z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s.exps[i - 1] = static_cast<int>(z[i]);
  return s;
}

}  // namespace

QDispSet q_dispersion(const Poly& f, const Poly& g, const QParam& q, int nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
  if (std::max(f.max_var(), g.max_var()) >= nvars)
    throw std::invalid_argument("polynomial uses more variables than requested");
  return restricted_dispersion(f, g, q, nvars, std::vector<bool>(static_cast<std::size_t>(nvars), true));
}

std::optional<StabilizerWitness> stabilizer_min_t(const Poly& d, const QParam& q) {
  QDispSet lat = q_dispersion(d, d, q, 2);
  long t = 0;
  for (const auto& b : lat.basis) t = std::gcd(t, b[1]);
  if (t == 0) return std::nullopt;
  if (lat.basis.size() > 1)
    throw std::logic_error("stabilizer of rank > 1; polynomial is not a valid fraction denominator");
  const IntVector& b = lat.basis[0];
  const long k = -t / b[1];
  return StabilizerWitness{t, k * b[2], k * b[0]};
}

std::optional<VarShift> tau_equivalent_in_var(const Poly& d, const Poly& d2, int var,
                                              const QParam& q) {
  std::vector<bool> free_var{var == kX, var == kY};
  QDispSet lat = restricted_dispersion(d2, d, q, 2, free_var);
  if (lat.empty) return std::nullopt;
  return VarShift{lat.particular[static_cast<std::size_t>(var) + 1], lat.particular[0]};
}

std::optional<ShiftMonomial> shift_relation(const Poly& member, const Poly& rep, ShiftGroup group,
                                            const QParam& q) {
  QDispSet lat = restricted_dispersion(member, rep, q, 2, group_vars(group));
  if (lat.empty) return std::nullopt;
  if (lat.basis.size() != 1) return to_shift(lat.particular);
  // The relation is only defined modulo the stabilizer; take the element with
  // the smallest shifts, then the smallest power of q.
  const IntVector& p = lat.particular;
  const IntVector& b = lat.basis[0];
  auto cost = [&](long k) {
    const long sx = std::labs(p[1] + k * b[1]), sy = std::labs(p[2] + k * b[2]);
    return std::tuple(std::max(sx, sy), sx + sy, std::labs(p[0] + k * b[0]), k);
  };
  std::vector<long> candidates{0};
  for (std::size_t i = 1; i < 3; ++i) {
    if (b[i] == 0) continue;
    const long k0 = -p[i] / b[i];
    for (long k = k0 - 1; k <= k0 + 1; ++k) candidates.push_back(k);
  }
  long best = candidates[0];
  for (long k : candidates)
    if (cost(k) < cost(best)) best = k;
  IntVector z = p;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += best * b[i];
  return to_shift(z);
}

std::vector<OrbitWitness> orbit_partition(const std::vector<Poly>& polys, ShiftGroup group,
                                          const QParam& q) {
  std::vector<OrbitWitness> classes;
  for (const auto& p : polys) {
    bool placed = false;
    for (auto& c : classes) {
      if (auto s = shift_relation(p, c.representative, group, q)) {
        c.members.push_back({p, *s});
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({p, {{p, ShiftMonomial{}}}});
  }

  const int axis = group == ShiftGroup::TauX ? kX : kY;
  for (auto& c : classes) {
    auto better = [&](const OrbitMember& a, const OrbitMember& b) {
      if (group != ShiftGroup::TauXY && a.sigma.exps[axis] != b.sigma.exps[axis])
        return a.sigma.exps[axis] < b.sigma.exps[axis];
      return compare_canonical(a.poly, b.poly) < 0;
    };
    const OrbitMember best = *std::min_element(c.members.begin(), c.members.end(), better);
    const ShiftMonomial back = best.sigma.inverse();
    c.representative = best.poly;
    for (auto& m : c.members) m.sigma = compose(m.sigma, back);
  }
  return classes;
}

}  // namespace qsum
