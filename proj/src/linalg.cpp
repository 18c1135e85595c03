#include "potalg/linalg.hpp"

#include <algorithm>

namespace potalg {

long rank_gauss(QMatrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = m[rank][col].reciprocal();
    for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

long rank_bareiss(const QMatrix& q) {
  if (q.empty()) return 0;
  const size_t rows = q.size(), cols = q[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i) {
    mpz_class lcm_den = 1;
    for (size_t j = 0; j < cols; ++j) {
      const mpq_class& v = q[i][j].rational_value();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
      lcm_den = lcm_den / g * v.get_den();
    }
    for (size_t j = 0; j < cols; ++j) {
      const mpq_class& v = q[i][j].rational_value();
      a[i][j] = v.get_num() * (lcm_den / v.get_den());
    }
  }

  mpz_class prev = 1;
  size_t rank = 0;
  std::vector<size_t> col_of(cols);
  for (size_t j = 0; j < cols; ++j) col_of[j] = j;
  for (size_t k = 0; k < std::min(rows, cols); ++k) {
    size_t pr = rows, pc = cols;
    for (size_t j = k; j < cols && pr == rows; ++j)
      for (size_t i = k; i < rows; ++i)
        if (a[i][col_of[j]] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(a[k], a[pr]);
    std::swap(col_of[k], col_of[pc]);
    for (size_t i = k + 1; i < rows; ++i) {
      for (size_t j = k + 1; j < cols; ++j) {
        mpz_class t = a[i][col_of[j]] * a[k][col_of[k]] -
                      a[i][col_of[k]] * a[k][col_of[j]];
        mpz_divexact(a[i][col_of[j]].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][col_of[k]] = 0;
    }
    prev = a[k][col_of[k]];
    ++rank;
  }
  return static_cast<long>(rank);
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  const size_t r = a.size();
  const size_t s = a.empty() ? 0 : a[0].size();
  const size_t c = b.empty() ? 0 : b[0].size();
  QMatrix out(r, std::vector<Scalar>(c, Scalar(0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < s; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < c; ++j) {
        Scalar prod = a[i][k] * b[k][j];
        if (out[i][j].is_zero())
          out[i][j] = prod;
        else
          out[i][j] += prod;
      }
    }
  return out;
}

bool is_zero_matrix(const QMatrix& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

long rank_sparse(const std::vector<SparseCol>& columns) {
  SparseIntEliminator elim;
  for (const SparseCol& col : columns) {
    SparseIntEliminator::Row row;
    for (const auto& [idx, value] : col) row.emplace(idx, value);
    elim.add(std::move(row));
  }
  return elim.rank();
}

}  // namespace potalg
