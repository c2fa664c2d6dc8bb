#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "flopdyn/rational.hpp"

namespace flopdyn {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  Rational trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

// Exact product; throws DimensionError unless a.cols() == b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
Vector operator*(const Matrix& a, const Vector& v);

// A^n by binary exponentiation; A^0 = I.
Matrix mat_power(const Matrix& a, unsigned long long n);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};
RowEchelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);
Rational determinant(const Matrix& a);
// Basis of {x : Ax = 0}, one column per basis vector.
std::vector<Vector> nullspace(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws std::domain_error when singular
// Solves Ax = b for square nonsingular A; std::domain_error when singular.
Vector solve(const Matrix& a, const Vector& b);

// Solves (lambda*I - p) x = v. Throws SingularResolventError when lambda is
// an eigenvalue of p.
Vector solve_resolvent(const Matrix& p, const Rational& lambda, const Vector& v);

}  // namespace flopdyn
