#include "flopdyn/flop_dynamics.hpp"

#include <string>
#include <type_traits>

#include "flopdyn/errors.hpp"

namespace flopdyn {

Vector AugmentedClass::stacked() const {
  Vector v = intersections;
  v.insert(v.end(), multiplicities.begin(), multiplicities.end());
  return v;
}

AugmentedClass AugmentedClass::unstack(const Vector& v, MultiplicityKind kind) {
  if (v.size() % 2 != 0) throw DimensionError("augmented class vector must have even length");
  const auto half = static_cast<std::ptrdiff_t>(v.size() / 2);
  return {Vector(v.begin(), v.begin() + half), Vector(v.begin() + half, v.end()), kind};
}

AugmentedClass operator+(const AugmentedClass& a, const AugmentedClass& b) {
  return {a.intersections + b.intersections, a.multiplicities + b.multiplicities, a.kind};
}

AugmentedClass operator*(const Rational& s, const AugmentedClass& a) {
  return {s * a.intersections, s * a.multiplicities, a.kind};
}

InvolutionRule InvolutionRule::swap(std::size_t i, std::size_t j, std::size_t n_curves) {
  InvolutionRule r;
  for (std::size_t k = 0; k < n_curves; ++k) r.permutation.push_back(k);
  std::swap(r.permutation.at(i), r.permutation.at(j));
  return r;
}

bool InvolutionRule::is_involution() const {
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (permutation[i] >= permutation.size() || permutation[permutation[i]] != i) return false;
  }
  return true;
}

void validate(const FlopRule& rule, std::size_t n_curves) {
  if (rule.flopped_curve >= n_curves) {
    throw IndexError("flop rule curve index " + std::to_string(rule.flopped_curve) + " out of range");
  }
  for (const auto& [j, m] : rule.wall_coefficients) {
    if (j >= n_curves) throw IndexError("wall coefficient index " + std::to_string(j) + " out of range");
    if (j == rule.flopped_curve) throw ConfigError("a wall coefficient cannot refer to the flopped curve");
    if (!m.is_integer() || m.sign() < 0) {
      throw ConfigError("wall coefficient " + m.to_string() + " is not a nonnegative integer");
    }
  }
}

void validate(const InvolutionRule& rule, std::size_t n_curves, bool require_involution) {
  if (rule.permutation.size() != n_curves) throw IndexError("permutation length does not match curve count");
  std::vector<bool> seen(n_curves, false);
  for (auto p : rule.permutation) {
    if (p >= n_curves) throw IndexError("permutation entry " + std::to_string(p) + " out of range");
    if (seen[p]) throw ConfigError("permutation is not a bijection");
    seen[p] = true;
  }
  if (require_involution && !rule.is_involution()) throw ConfigError("permutation is not an involution");
}

AugmentedClass flop_transform(const FlopRule& rule, const AugmentedClass& v) {
  const std::size_t n = v.curve_count();
  if (v.multiplicities.size() != n) throw DimensionError("augmented class halves differ in length");
  validate(rule, n);
  AugmentedClass out = v;
  const std::size_t i = rule.flopped_curve;
  const Rational a = v.intersections[i];
  out.intersections[i] = -a;
  for (const auto& [j, m] : rule.wall_coefficients) out.intersections[j] += m * a;
  out.multiplicities[i] += a;
  return out;
}

AugmentedClass involution_transform(const InvolutionRule& rule, const AugmentedClass& v) {
  const std::size_t n = v.curve_count();
  validate(rule, n, false);
  if (v.multiplicities.size() != n) throw DimensionError("augmented class halves differ in length");
  AugmentedClass out{Vector(n), Vector(n), v.kind};
  for (std::size_t i = 0; i < n; ++i) {
    out.intersections[rule.permutation[i]] = v.intersections[i];
    out.multiplicities[rule.permutation[i]] = v.multiplicities[i];
  }
  return out;
}

AugmentedClass apply_rule(const Rule& rule, const AugmentedClass& v) {
  return std::visit(
      [&](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, FlopRule>) return flop_transform(r, v);
        else return involution_transform(r, v);
      },
      rule);
}

Matrix rule_matrix(const Rule& rule, std::size_t n_curves) {
  // Column j is the image of the j-th unit vector; every rule is linear.
  const std::size_t dim = 2 * n_curves;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim; ++j) {
    Vector e(dim);
    e[j] = 1;
    cols.push_back(apply_rule(rule, AugmentedClass::unstack(e)).stacked());
  }
  return Matrix::from_columns(cols);
}

Matrix compose_to_matrix(const std::vector<Rule>& rules, std::size_t n_curves) {
  Matrix m = Matrix::identity(2 * n_curves);
  for (const auto& r : rules) m = rule_matrix(r, n_curves) * m;
  return m;
}

std::vector<AugmentedClass> iterate(const Matrix& m, const AugmentedClass& v0, std::size_t n) {
  const Vector start = v0.stacked();
  if (!m.is_square() || m.rows() != start.size()) {
    throw DimensionError("iterate: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " but the class has " + std::to_string(start.size()) + " coordinates");
  }
  std::vector<AugmentedClass> seq;
  seq.reserve(n + 1);
  seq.push_back(v0);
  Vector v = start;
  for (std::size_t t = 0; t < n; ++t) {
    v = m * v;
    seq.push_back(AugmentedClass::unstack(v, v0.kind));
  }
  return seq;
}

std::vector<Rule> i2_rules() {
  FlopRule flop;
  flop.flopped_curve = 0;
  flop.wall_coefficients[1] = 2;
  return {flop, InvolutionRule::swap(0, 1, 2)};
}

Matrix i2_matrix() { return compose_to_matrix(i2_rules(), 2); }

AugmentedClass i2_closed_form(unsigned long long n) {
  const Rational r(mpz_class(std::to_string(n)));
  return {{Rational(2) * r + 1, Rational(-2) * r + 1},
          {r * (r - 1) / Rational(2), r * (r + 1) / Rational(2)},
          MultiplicityKind::Multiplicity};
}

bool closed_form_check(unsigned long long n) {
  const Matrix m = i2_matrix();
  Vector v = vec({1, 1, 0, 0});
  for (unsigned long long t = 0; t < n; ++t) v = m * v;
  return AugmentedClass::unstack(v) == i2_closed_form(n);
}

}  // namespace flopdyn
