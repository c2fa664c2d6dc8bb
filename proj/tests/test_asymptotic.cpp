#include <gtest/gtest.h>

#include "flopdyn/asymptotic.hpp"
#include "flopdyn/errors.hpp"
#include "flopdyn/flop_dynamics.hpp"
#include "test_support.hpp"

namespace flopdyn {
namespace {

using testing::RandomRationals;

SigmaReport i2_report(std::size_t n_max) {
  return sigma_sequence(RelativeNS::dual_basis(2), {vec({1, -1})}, AugmentedClass::unstack(vec({1, 1, 0, 0})),
                        i2_matrix(), n_max);
}

TEST(SigmaSequence, FirstCurveGrowsLinearly) {
  const SigmaReport r = i2_report(100);
  EXPECT_EQ(r.relation.kind, OrbitRelationKind::Linear);
  EXPECT_EQ(r.relation.rate, Rational(2));
  const SigmaSequence& s = r.curves[0];
  ASSERT_EQ(s.values.size(), 100u);
  for (long n = 1; n <= 100; ++n) {
    EXPECT_EQ(s.values[n - 1], Rational(n - 1, 4));
    EXPECT_EQ(s.epsilons[n - 1], Rational(1, 2 * n));
  }
  EXPECT_EQ(s.classification.kind, GrowthKind::Divergent);
  EXPECT_EQ(s.classification.degree, 1u);
}

TEST(SigmaSequence, SecondCurve) {
  const SigmaReport r = i2_report(40);
  for (long n = 1; n <= 40; ++n) EXPECT_EQ(r.curves[1].values[n - 1], Rational(n + 1, 4));
  EXPECT_EQ(r.curves[1].classification.kind, GrowthKind::Divergent);
}

TEST(SigmaSequence, ValuesNondecreasing) {
  const SigmaReport r = i2_report(60);
  for (const auto& s : r.curves) {
    EXPECT_TRUE(s.nondecreasing());
    for (std::size_t i = 1; i < s.values.size(); ++i) EXPECT_LE(s.values[i - 1], s.values[i]);
    for (std::size_t i = 1; i < s.epsilons.size(); ++i) EXPECT_LT(s.epsilons[i], s.epsilons[i - 1]);
  }
}

TEST(SigmaSequence, StationaryOrbitWithZeroMultiplicity) {
  const Matrix swap_only = compose_to_matrix({InvolutionRule::swap(0, 1, 2)}, 2);
  const SigmaReport r = sigma_sequence(RelativeNS::dual_basis(2), {vec({1, 1})},
                                       AugmentedClass::unstack(vec({1, 1, 0, 0})), swap_only, 10);
  for (const auto& s : r.curves) {
    for (const auto& v : s.values) EXPECT_EQ(v, Rational(0));
    EXPECT_EQ(s.classification.kind, GrowthKind::ConvergentFinite);
    EXPECT_EQ(s.classification.limit, Rational(0));
  }
}

TEST(SigmaSequence, BoundaryOffTheOrbitDirection) {
  EXPECT_THROW(sigma_sequence(RelativeNS::dual_basis(2), {vec({1, 0})}, AugmentedClass::unstack(vec({1, 1, 0, 0})),
                              i2_matrix(), 5),
               OrbitMismatchError);
}

TEST(ClassifyGrowth, Polynomials) {
  Vector lin, quad, cubic;
  for (long n = 1; n <= 12; ++n) {
    lin.push_back(Rational(n - 1, 4));
    quad.push_back(Rational(n * n - 3 * n, 7));
    cubic.push_back(Rational(n * n * n));
  }
  EXPECT_EQ(classify_growth(lin).degree, 1u);
  EXPECT_EQ(classify_growth(quad).kind, GrowthKind::Divergent);
  EXPECT_EQ(classify_growth(quad).degree, 2u);
  EXPECT_EQ(classify_growth(cubic).degree, 3u);
}

TEST(ClassifyGrowth, ConstantIsConvergent) {
  const Classification c = classify_growth(Vector(8, Rational(5, 3)));
  EXPECT_EQ(c.kind, GrowthKind::ConvergentFinite);
  EXPECT_EQ(c.limit, Rational(5, 3));
}

TEST(ClassifyGrowth, HyperbolicSequences) {
  // v_n = (n+1)/(2n) decreases to 1/2; the reported value is the limsup, not the first term
  Vector v;
  for (long n = 1; n <= 12; ++n) v.push_back(Rational(n + 1, 2 * n));
  const Classification c = classify_growth(v);
  EXPECT_EQ(c.kind, GrowthKind::ConvergentFinite);
  EXPECT_EQ(c.limit, Rational(1, 2));
}

TEST(ClassifyGrowth, ExponentialIsIndeterminate) {
  Vector v;
  for (long n = 1; n <= 12; ++n) v.push_back(pow(Rational(2), n));
  EXPECT_EQ(classify_growth(v).kind, GrowthKind::Indeterminate);
}

TEST(ClassifyGrowth, TooShortToConfirm) {
  EXPECT_EQ(classify_growth(vec({0, 1})).kind, GrowthKind::Indeterminate);
}

TEST(PolynomialDegree, FiniteDifferences) {
  EXPECT_EQ(polynomial_degree(vec({0, 0, 0})), -1);
  EXPECT_EQ(polynomial_degree(vec({1, 3, 5, 7})), 1);
  EXPECT_FALSE(polynomial_degree(vec({1, 3})).has_value());
}

TEST(NSigma, AllZero) {
  const ZariskiDecomposition z = n_sigma(vec({1, -1}), {{"G1", Rational(0)}}, {});
  ASSERT_TRUE(z.defined);
  EXPECT_EQ(*z.positive_part, vec({1, -1}));
}

TEST(NSigma, InfiniteCoefficientMakesItUndefined) {
  const ZariskiDecomposition z = n_sigma(vec({1, -1}), {{"E", SigmaValue::infinite()}}, {});
  EXPECT_FALSE(z.defined);
  EXPECT_FALSE(z.positive_part.has_value());
  EXPECT_EQ(z.negative_coeffs.at("E").to_string(), "inf");
}

TEST(NSigma, SubtractsFiniteCoefficients) {
  const ZariskiDecomposition z = n_sigma(vec({1, -1}), {{"G1", Rational(1, 2)}, {"G2", Rational(0)}},
                                         {{"G1", vec({1, 0})}, {"G2", vec({0, 1})}});
  ASSERT_TRUE(z.defined);
  EXPECT_EQ(*z.positive_part, (Vector{Rational(1, 2), Rational(-1)}));
}

TEST(NSigma, Errors) {
  EXPECT_THROW(n_sigma(vec({1, 0}), {{"G", Rational(-1)}}, {{"G", vec({1, 0})}}), InvalidSigmaError);
  EXPECT_THROW(n_sigma(vec({1, 0}), {{"G", Rational(1)}}, {}), InvalidSigmaError);
}

TEST(NSigma, ReconstructionIdentity) {
  RandomRationals rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(rng.index(4));
    const Vector d = rng.vector(r);
    std::map<std::string, SigmaValue> sig;
    std::map<std::string, Vector> classes;
    const int k = rng.index(4);
    for (int i = 0; i < k; ++i) {
      const std::string name = "G" + std::to_string(i);
      sig.emplace(name, abs(rng.rational()));
      classes.emplace(name, rng.vector(r));
    }
    const ZariskiDecomposition z = n_sigma(d, sig, classes);
    ASSERT_TRUE(z.defined);
    Vector sum = *z.positive_part;
    for (const auto& [name, s] : sig) sum = sum + s.value() * classes.at(name);
    EXPECT_EQ(sum, d);
  }
}

TEST(FinitenessGuard, Clauses) {
  FinitenessEvidence point;
  point.base_is_point = true;
  EXPECT_EQ(finiteness_guard(point).reason, FinitenessClause::PointBase);

  FinitenessEvidence codim2;
  codim2.codim_image = 2;
  EXPECT_FALSE(finiteness_guard(codim2).guaranteed_finite);
  EXPECT_FALSE(finiteness_guard(codim2).reason.has_value());

  FinitenessEvidence witness;
  witness.numerically_effective_witness = DivisorClass{vec({1, 0})};
  EXPECT_EQ(finiteness_guard(witness).reason, FinitenessClause::EffectiveWitness);

  FinitenessEvidence codim1;
  codim1.codim_image = 1;
  EXPECT_EQ(finiteness_guard(codim1).reason, FinitenessClause::SmallCodimension);

  codim1.base_is_point = true;
  EXPECT_EQ(finiteness_guard(codim1).reason, FinitenessClause::PointBase);
}

TEST(SigmaBound, Examples) {
  EXPECT_EQ(sigma_bound_point_base(0, 1, 1), Rational(1));
  EXPECT_EQ(sigma_bound_point_base(3, 2, 5), Rational(1));
  EXPECT_EQ(sigma_bound_point_base(7, 1, 2), Rational(4));
  EXPECT_THROW(sigma_bound_point_base(1, 1, 0), InvalidIntersectionError);
  EXPECT_THROW(sigma_bound_point_base(1, 1, -2), InvalidIntersectionError);
}

TEST(Multiplicities, AddLinearlyUnderTheDynamics) {
  RandomRationals rng(302);
  const Matrix m = i2_matrix();
  for (int trial = 0; trial < 100; ++trial) {
    const AugmentedClass v = AugmentedClass::unstack(rng.vector(4));
    const AugmentedClass w = AugmentedClass::unstack(rng.vector(4));
    const auto sum = AugmentedClass::unstack(m * (v + w).stacked());
    const auto sv = AugmentedClass::unstack(m * v.stacked());
    const auto sw = AugmentedClass::unstack(m * w.stacked());
    EXPECT_EQ(sum.multiplicities, sv.multiplicities + sw.multiplicities);
  }
}

}  // namespace
}  // namespace flopdyn
