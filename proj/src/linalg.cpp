#include "minkval/linalg.hpp"

#include <utility>

namespace minkval {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(int n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(int n, const Rational& s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionError("matrix/vector shape mismatch");
  std::vector<Rational> y(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0) s += (*this)(r, c) * x[static_cast<std::size_t>(c)];
    }
    y[static_cast<std::size_t>(r)] = s;
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

namespace {

// Reduces m in place to row echelon form; returns the rank and the sign of
// the row permutation applied.
int eliminate(Matrix& m, int& swaps) {
  swaps = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      ++swaps;
    }
    for (int r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return row;
}

}  // namespace

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  int swaps = 0;
  if (eliminate(m, swaps) < m.rows()) return 0;
  Rational d = swaps % 2 ? -1 : 1;
  for (int i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

int rank(Matrix m) {
  int swaps = 0;
  return eliminate(m, swaps);
}

std::vector<Rational> solve(Matrix m, std::vector<Rational> b) {
  const int n = m.rows();
  if (m.cols() != n || static_cast<int>(b.size()) != n) throw DimensionError("solve: shape mismatch");
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError("singular linear system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] /= m(i, i);
  return b;
}

Matrix inverse(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DimensionError("inverse of a non-square matrix");
  Matrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(j)] = 1;
    const auto col = solve(m, e);
    for (int i = 0; i < n; ++i) inv(i, j) = col[static_cast<std::size_t>(i)];
  }
  return inv;
}

}  // namespace minkval
