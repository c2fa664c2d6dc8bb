#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "flopdyn/matrix.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

// Which quantity the multiplicity coordinates hold. The algebra is identical.
enum class MultiplicityKind { Multiplicity, AsymptoticMultiplicity };

// (D.C_1, ..., D.C_k, mult_{C_1} D, ..., mult_{C_k} D)
struct AugmentedClass {
  Vector intersections;
  Vector multiplicities;
  MultiplicityKind kind = MultiplicityKind::Multiplicity;

  std::size_t curve_count() const { return intersections.size(); }
  // Flattened layout: all intersections, then all multiplicities.
  Vector stacked() const;
  static AugmentedClass unstack(const Vector& v, MultiplicityKind kind = MultiplicityKind::Multiplicity);

  friend bool operator==(const AugmentedClass& a, const AugmentedClass& b) {
    return a.intersections == b.intersections && a.multiplicities == b.multiplicities;
  }
};

AugmentedClass operator+(const AugmentedClass& a, const AugmentedClass& b);
AugmentedClass operator*(const Rational& s, const AugmentedClass& a);

// Flop of the curve `flopped_curve`. wall_coefficients[j] is the number of
// points where the strict transform of C_j meets the exceptional divisor of
// the resolution.
struct FlopRule {
  std::size_t flopped_curve = 0;
  std::map<std::size_t, Rational> wall_coefficients;
};

// Automorphism permuting the tracked curves: curve i goes to permutation[i].
struct InvolutionRule {
  std::vector<std::size_t> permutation;

  static InvolutionRule swap(std::size_t i, std::size_t j, std::size_t n_curves);
  bool is_involution() const;
};

using Rule = std::variant<FlopRule, InvolutionRule>;

// Throws IndexError/ConfigError when the rule does not fit `n_curves`
// curves, or when wall coefficients are not nonnegative integers.
void validate(const FlopRule& rule, std::size_t n_curves);
void validate(const InvolutionRule& rule, std::size_t n_curves, bool require_involution = true);

AugmentedClass flop_transform(const FlopRule& rule, const AugmentedClass& v);
AugmentedClass involution_transform(const InvolutionRule& rule, const AugmentedClass& v);
AugmentedClass apply_rule(const Rule& rule, const AugmentedClass& v);

// 2n x 2n matrix of one rule acting on stacked augmented classes.
Matrix rule_matrix(const Rule& rule, std::size_t n_curves);

// Matrix of applying `rules` in order (first rule acts first). Empty -> I.
Matrix compose_to_matrix(const std::vector<Rule>& rules, std::size_t n_curves);

// v_0..v_n with v_{t+1} = m v_t.
std::vector<AugmentedClass> iterate(const Matrix& m, const AugmentedClass& v0, std::size_t n);

// The matrix of the I_2 example: flop of C1 with wall coefficient 2 on C2,
// followed by the swap of C1 and C2.
Matrix i2_matrix();
std::vector<Rule> i2_rules();

// (2n+1, -2n+1, n(n-1)/2, n(n+1)/2)
AugmentedClass i2_closed_form(unsigned long long n);

// Iterates the I_2 matrix from (1,1,0,0) and compares the n-th vector with
// the closed form.
bool closed_form_check(unsigned long long n);

}  // namespace flopdyn
