#include "kolmo/matrix.hpp"

#include <utility>

#include "kolmo/errors.hpp"

namespace kolmo {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimMismatch("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimMismatch("matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

struct BareissResult {
  std::size_t rank = 0;
  Integer last_pivot = 1;
  int sign = 1;
};

// Integer image of m with each row scaled by the lcm of its denominators. `scale`
// receives the product of those multipliers.
std::vector<std::vector<Integer>> clear_denominators(const RationalMatrix& m, Integer& scale) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  return a;
}

BareissResult bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  Integer scale;
  auto a = clear_denominators(m, scale);
  return bareiss(a, m.cols()).rank;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) return 1;
  Integer scale;
  auto a = clear_denominators(m, scale);
  const BareissResult res = bareiss(a, m.cols());
  if (res.rank < m.rows()) return 0;
  Rational det(res.last_pivot * res.sign, scale);
  det.canonicalize();
  return det;
}

std::vector<RationalVector> row_reduce(std::vector<RationalVector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m, NullSide side) {
  const RationalMatrix a = side == NullSide::Left ? m.transpose() : m;
  const std::size_t cols = a.cols();
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  const auto rref = row_reduce(std::move(rows), cols);

  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : rref) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < rref.size(); ++i) v[pivot_of_row[i]] = -rref[i][free];
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis), cols);
}

RationalVector left_multiply(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw DimMismatch("vector-matrix product shape mismatch");
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  return out;
}

RationalVector right_multiply(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DimMismatch("matrix-vector product shape mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace kolmo
