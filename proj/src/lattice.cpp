#include "qsum/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "qsum/rational.hpp"

namespace qsum {

namespace {

using IntMatrix = std::vector<std::vector<Int>>;

struct Bezout {
  Int g, s, t;
};

Bezout ext_gcd(const Int& a, const Int& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("lattice entry exceeds machine range");
  return z.get_si();
}

IntMatrix hnf_rows(IntMatrix m, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      if (m[r][col] == 0) {
        std::swap(m[r], m[i]);
        continue;
      }
      Int a = m[r][col], b = m[i][col];
      Bezout bz = ext_gcd(a, b);
      Int ag = a / bz.g, bg = b / bz.g;
      for (std::size_t k = 0; k < ncols; ++k) {
        Int u = bz.s * m[r][k] + bz.t * m[i][k];
        Int w = -bg * m[r][k] + ag * m[i][k];
        m[r][k] = std::move(u);
        m[i][k] = std::move(w);
      }
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int f = floor_div(m[i][col], m[r][col]);
      if (f == 0) continue;
      for (std::size_t k = 0; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

IntMatrix to_int(const std::vector<IntVector>& rows, std::size_t ncols) {
  IntMatrix m;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("row length mismatch");
    std::vector<Int> r;
    for (long x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<IntVector> to_long(const IntMatrix& m) {
  std::vector<IntVector> out;
  for (const auto& row : m) {
    IntVector r;
    for (const auto& x : row) r.push_back(to_long(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t pivot_col(const IntVector& row) {
  std::size_t c = 0;
  while (c < row.size() && row[c] == 0) ++c;
  return c;
}

}  // namespace

bool LatticeCoset::contains(const IntVector& z) const {
  if (empty || z.size() != particular.size()) return false;
  IntVector d(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) d[i] = z[i] - particular[i];
  for (const auto& b : basis) {
    std::size_t c = pivot_col(b);
    if (d[c] % b[c] != 0) return false;
    long f = d[c] / b[c];
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= f * b[i];
  }
  for (long x : d)
    if (x != 0) return false;
  return true;
}

std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows, std::size_t ncols) {
  return to_long(hnf_rows(to_int(rows, ncols), ncols));
}

LatticeCoset diophantine_solve(const std::vector<IntVector>& rows, const IntVector& rhs,
                               std::size_t ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("rhs length mismatch");
  IntMatrix m = to_int(rows, ncols);
  IntMatrix u(ncols, std::vector<Int>(ncols, Int(0)));
  for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;

  auto col_op = [&](std::size_t k, std::size_t j, const Int& s, const Int& t, const Int& bg,
                    const Int& ag) {
    // col_k <- s col_k + t col_j ; col_j <- -bg col_k + ag col_j
    auto apply = [&](IntMatrix& mat) {
      for (auto& row : mat) {
        Int a = row[k], b = row[j];
        row[k] = s * a + t * b;
        row[j] = -bg * a + ag * b;
      }
    };
    apply(m);
    apply(u);
  };
  auto swap_cols = [&](std::size_t k, std::size_t j) {
    for (auto& row : m) std::swap(row[k], row[j]);
    for (auto& row : u) std::swap(row[k], row[j]);
  };

  std::size_t rank = 0;
  std::vector<long> pivot(rows.size(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (rank == ncols) break;
    for (std::size_t j = rank + 1; j < ncols; ++j) {
      if (m[i][j] == 0) continue;
      if (m[i][rank] == 0) {
        swap_cols(rank, j);
        continue;
      }
      Int a = m[i][rank], b = m[i][j];
      Bezout bz = ext_gcd(a, b);
      col_op(rank, j, bz.s, bz.t, b / bz.g, a / bz.g);
    }
    if (m[i][rank] != 0) pivot[i] = static_cast<long>(rank++);
  }

  std::vector<Int> w(ncols, Int(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int acc = 0;
    const std::size_t upto = pivot[i] >= 0 ? static_cast<std::size_t>(pivot[i]) : ncols;
    for (std::size_t j = 0; j < upto; ++j) acc += m[i][j] * w[j];
    Int diff = Int(rhs[i]) - acc;
    if (pivot[i] < 0) {
      if (diff != 0) return LatticeCoset{};
      continue;
    }
    const Int& pv = m[i][static_cast<std::size_t>(pivot[i])];
    if (diff % pv != 0) return LatticeCoset{};
    w[static_cast<std::size_t>(pivot[i])] = diff / pv;
  }

  std::vector<Int> z(ncols, Int(0));
  for (std::size_t r = 0; r < ncols; ++r)
    for (std::size_t c = 0; c < ncols; ++c) z[r] += u[r][c] * w[c];

  IntMatrix kernel;
  for (std::size_t c = rank; c < ncols; ++c) {
    std::vector<Int> col;
    for (std::size_t r = 0; r < ncols; ++r) col.push_back(u[r][c]);
    kernel.push_back(std::move(col));
  }
  kernel = hnf_rows(std::move(kernel), ncols);
  for (const auto& b : kernel) {
    std::size_t c = 0;
    while (b[c] == 0) ++c;
    Int f = floor_div(z[c], b[c]);
    if (f == 0) continue;
    for (std::size_t k = 0; k < ncols; ++k) z[k] -= f * b[k];
  }

  LatticeCoset out;
  out.empty = false;
  for (const auto& x : z) out.particular.push_back(to_long(x));
  out.basis = to_long(kernel);
  return out;
}

}  // namespace qsum
