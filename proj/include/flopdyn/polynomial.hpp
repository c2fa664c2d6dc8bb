#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flopdyn/matrix.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

// Univariate polynomial over Q, coefficients stored from the constant term up.
// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs_low_to_high);

  static Polynomial monomial(const Rational& c, std::size_t degree);
  // (t - root)
  static Polynomial linear_factor(const Rational& root);

  const Vector& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Matrix operator()(const Matrix& a) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Quotient and remainder of division by a nonzero polynomial.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  // Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Vector coeffs_;
};

// Monic characteristic polynomial det(tI - A) (Faddeev-LeVerrier recursion).
Polynomial char_poly(const Matrix& a);

struct RationalRoot {
  Rational value;
  std::size_t multiplicity;
};

struct RootFactorization {
  std::vector<RationalRoot> roots;  // distinct rational roots, descending
  Polynomial remainder;             // factor with no rational roots
};

// Splits off every rational root of a nonzero polynomial (rational root
// theorem on the primitive integer multiple).
RootFactorization rational_roots(const Polynomial& p);

}  // namespace flopdyn
