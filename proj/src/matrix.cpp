#include "flopdyn/matrix.hpp"

#include <sstream>
#include <utility>

#include "flopdyn/errors.hpp"

namespace flopdyn {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  return from_rows(cols).transpose();
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  if (r >= rows_) throw IndexError("Matrix::row out of range");
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  if (c >= cols_) throw IndexError("Matrix::column out of range");
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("Matrix::set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

Matrix mat_power(const Matrix& a, unsigned long long n) {
  if (!a.is_square()) throw DimensionError("mat_power: non-square matrix");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (n > 0) {
    if (n & 1ULL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

RowEchelon rref(const Matrix& a) {
  RowEchelon out{a, {}};
  Matrix& m = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    const Rational inv = Rational(1) / m(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(pivot_row, j);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
  Matrix m = a;
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c).is_zero()) ++r;
    if (r == n) return Rational(0);
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<Vector> nullspace(const Matrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  return e.reduced.block(0, n, n, n);
}

Vector solve(const Matrix& a, const Vector& b) {
  if (!a.is_square()) throw DimensionError("solve: non-square system");
  if (a.rows() != b.size()) throw DimensionError("solve: right-hand side length mismatch");
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < n; ++i) aug(i, n) = b[i];
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("solve: singular system");
  return e.reduced.column(n);
}

Vector solve_resolvent(const Matrix& p, const Rational& lambda, const Vector& v) {
  if (!p.is_square()) throw DimensionError("solve_resolvent: non-square matrix");
  if (p.rows() != v.size()) throw DimensionError("solve_resolvent: vector length mismatch");
  const Matrix shifted = lambda * Matrix::identity(p.rows()) - p;
  if (determinant(shifted).is_zero()) {
    throw SingularResolventError("lambda = " + lambda.to_string() + " is an eigenvalue of the permutation block");
  }
  return solve(shifted, v);
}

}  // namespace flopdyn
