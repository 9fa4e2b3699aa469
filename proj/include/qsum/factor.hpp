#pragma once

#include <utility>
#include <vector>

#include "qsum/poly.hpp"

namespace qsum {

/// unit * prod(poly^mult). Factors are monic under the lex order, irreducible
/// over Q, and pairwise distinct; they are sorted by compare_canonical.
struct Factorization {
  Rat unit = 1;
  std::vector<std::pair<Poly, int>> factors;
};

Poly expand(const Factorization& f);

/// Yun decomposition in v. A non-constant v-free content is reported first
/// with multiplicity 1; the remaining parts are monic, squarefree in v,
/// pairwise coprime, and listed by increasing multiplicity. p must be nonzero.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p, int v);

/// Complete factorization over Q of a polynomial in (at most) one variable.
Factorization factor_univariate(const Poly& p);

/// Complete factorization over Q of a polynomial in x and y.
Factorization factor_bivariate(const Poly& p);

}  // namespace qsum
