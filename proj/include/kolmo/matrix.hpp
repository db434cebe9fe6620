#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kolmo/rational.hpp"

namespace kolmo {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over Q. Everything in this project is at most a few
// dozen rows, so there is no sparse path.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

enum class NullSide { Left, Right };

// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const RationalMatrix& m);

// Exact determinant by Bareiss elimination. Throws NotSquare.
Rational determinant(const RationalMatrix& m);

// Basis of {v : vM = 0} (Left) or {v : Mv = 0} (Right), in reduced echelon form:
// each vector's first nonzero entry is 1 and vectors are ordered by that position.
std::vector<RationalVector> nullspace(const RationalMatrix& m, NullSide side);

// Reduced row echelon form of the rows; zero rows dropped.
std::vector<RationalVector> row_reduce(std::vector<RationalVector> rows, std::size_t cols);

RationalVector left_multiply(std::span<const Rational> v, const RationalMatrix& m);
RationalVector right_multiply(const RationalMatrix& m, std::span<const Rational> v);

bool is_zero_vector(std::span<const Rational> v);

}  // namespace kolmo
