#pragma once

// Small dense exact matrices. Dimensions never exceed 5 in this library, so
// plain Gaussian elimination over the rationals is all that is needed.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "minkval/rational.hpp"
#include "minkval/vector.hpp"

namespace minkval {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(int n);
  static Matrix scalar(int n, const Rational& s);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Matrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(Matrix m);
/// Throws SingularMatrixError.
Matrix inverse(const Matrix& m);
/// Solves m x = b for square nonsingular m. Throws SingularMatrixError.
std::vector<Rational> solve(Matrix m, std::vector<Rational> b);
int rank(Matrix m);

template <class To, class From>
Coordinates<To> apply(const Matrix& m, const Coordinates<From>& v) {
  return Coordinates<To>(m.apply(v.coords()));
}

}  // namespace minkval
