#pragma once

#include <utility>
#include <vector>

#include "qsum/factor.hpp"
#include "qsum/upoly.hpp"

namespace qsum::detail {

std::vector<std::pair<UPoly<Rat>, int>> squarefree_rat(const UPoly<Rat>& f);
std::vector<UPoly<Rat>> irreducible_factors_rat(const UPoly<Rat>& squarefree_monic);
UPoly<Rat> to_upoly(const Poly& p, int v);
Poly from_upoly(const UPoly<Rat>& a, int v);
void sort_factors(Factorization& f);

}  // namespace qsum::detail
