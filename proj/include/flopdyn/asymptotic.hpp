#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flopdyn/flop_dynamics.hpp"
#include "flopdyn/matrix.hpp"
#include "flopdyn/ns_lattice.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

// A coefficient of the negative part: a nonnegative rational or +infinity.
class SigmaValue {
 public:
  SigmaValue(Rational value) : value_(std::move(value)) {}  // NOLINT
  static SigmaValue infinite() { return SigmaValue(); }

  bool is_finite() const { return value_.has_value(); }
  // Throws std::logic_error for the infinite value.
  const Rational& value() const;
  // Exact fraction string, or "inf".
  std::string to_string() const;

  friend bool operator==(const SigmaValue&, const SigmaValue&) = default;

 private:
  SigmaValue() = default;
  std::optional<Rational> value_;
};

enum class GrowthKind { ConvergentFinite, Divergent, Indeterminate };

struct Classification {
  GrowthKind kind = GrowthKind::Indeterminate;
  Rational limit;          // ConvergentFinite: limit superior of the values
  std::size_t degree = 0;  // Divergent: values grow like n^degree
};

// Classifies values v_1..v_N (indexed by n = 1..N) by exact finite
// differences. A polynomial sequence of degree d >= 1 is Divergent(d). A
// sequence with n*v_n quasi-polynomial of period <= 6 and degree D is
// Divergent(D-1) when D >= 2 and convergent otherwise. Anything else is
// Indeterminate.
Classification classify_growth(const Vector& values);

// Degree of a polynomial sequence when at least one vanishing difference
// confirms it; -1 for the zero sequence.
std::optional<int> polynomial_degree(const Vector& seq);

enum class OrbitRelationKind {
  Linear,      // H_n == c*n*D + H_0
  Stationary,  // H_n == H_0 == D/t
};

struct OrbitRelation {
  OrbitRelationKind kind = OrbitRelationKind::Linear;
  Rational rate;  // c for Linear, t for Stationary
};

// Upper bounds for sigma_{C_i}(D) realized by the orbit representatives of
// D + eps_n H_0, for eps_n decreasing to zero.
struct SigmaSequence {
  std::size_t curve = 0;
  Vector epsilons;
  Vector values;
  Classification classification;

  bool nondecreasing() const;
};

struct SigmaReport {
  OrbitRelation relation;
  std::vector<SigmaSequence> curves;
};

// Follows H_n = dynamics^n H_0 from `ample_seed` and converts the
// multiplicities of the H_n into sigma bounds for `boundary`. Throws
// OrbitMismatchError when the orbit does not move along `boundary`.
SigmaReport sigma_sequence(const RelativeNS& ns, const DivisorClass& boundary, const AugmentedClass& ample_seed,
                           const Matrix& dynamics, std::size_t n_max);

struct ZariskiDecomposition {
  std::map<std::string, SigmaValue> negative_coeffs;
  std::optional<Vector> positive_part;  // empty when undefined
  bool defined = false;
};

// N_sigma = sum sigma_G G and P_sigma = D - N_sigma. Any infinite coefficient
// makes the decomposition undefined. `divisor_classes` supplies [G] for
// every divisor with a positive finite coefficient.
ZariskiDecomposition n_sigma(const Vector& divisor_class, const std::map<std::string, SigmaValue>& sigma_values,
                             const std::map<std::string, Vector>& divisor_classes);

// Caller-asserted facts about D, V and the base.
struct FinitenessEvidence {
  bool base_is_point = false;
  std::optional<DivisorClass> numerically_effective_witness;
  std::optional<int> codim_image;
};

enum class FinitenessClause { PointBase = 1, EffectiveWitness = 2, SmallCodimension = 3 };

struct FinitenessVerdict {
  bool guaranteed_finite = false;
  std::optional<FinitenessClause> reason;  // first matching clause
};

FinitenessVerdict finiteness_guard(const FinitenessEvidence& ev);

// (D.A^{n-1} + A.A^{n-1}) / (V.A^{n-1}); throws InvalidIntersectionError
// unless v_dot > 0.
Rational sigma_bound_point_base(const Rational& d_dot, const Rational& a_dot, const Rational& v_dot);

}  // namespace flopdyn
