#include "flopdyn/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flopdyn/errors.hpp"

namespace flopdyn {
namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  // Prime factorization by trial division.
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t existing = divs.size();
    mpz_class power = 1;
    for (unsigned k = 1; k <= exp; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

}  // namespace

Polynomial::Polynomial(Vector coeffs_low_to_high) : coeffs_(std::move(coeffs_low_to_high)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  Vector v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  if (!a.is_square()) throw DimensionError("polynomial evaluated at non-square matrix");
  const Matrix id = Matrix::identity(a.rows());
  Matrix acc(a.rows(), a.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + (*it) * id;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vector r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vector r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Vector rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  Vector quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead = divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("char_poly: non-square matrix");
  const std::size_t n = a.rows();
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  Vector c(n + 1);
  c[n] = 1;
  const Matrix id = Matrix::identity(n);
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Rational(static_cast<std::int64_t>(k));
  }
  return Polynomial(std::move(c));
}

RootFactorization rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  RootFactorization out;
  Polynomial rest = p;

  std::size_t zero_mult = 0;
  while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
    rest = rest.divmod(Polynomial::monomial(Rational(1), 1)).first;
    ++zero_mult;
  }

  if (rest.degree() > 0) {
    // Clear denominators; only the constant and leading coefficients matter.
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class a0 = (rest.coefficient(0) * Rational(lcm_den)).numerator();
    const mpz_class an = (rest.leading() * Rational(lcm_den)).numerator();

    std::set<Rational> candidates;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        candidates.insert(Rational(num, den));
        candidates.insert(Rational(mpz_class(-num), den));
      }
    }
    for (const auto& cand : candidates) {
      while (rest.degree() > 0 && rest(cand).is_zero()) {
        rest = rest.divmod(Polynomial::linear_factor(cand)).first;
        auto it = std::find_if(out.roots.begin(), out.roots.end(),
                               [&](const RationalRoot& r) { return r.value == cand; });
        if (it == out.roots.end()) out.roots.push_back({cand, 1});
        else ++it->multiplicity;
      }
    }
  }
  if (zero_mult) out.roots.push_back({Rational(0), zero_mult});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& x, const RationalRoot& y) { return x.value > y.value; });
  out.remainder = rest;
  return out;
}

}  // namespace flopdyn
