#include <gtest/gtest.h>

#include <cmath>

#include "flopdyn/config.hpp"
#include "flopdyn/errors.hpp"
#include "flopdyn/flop_dynamics.hpp"
#include "flopdyn/polynomial.hpp"
#include "flopdyn/small_lift.hpp"
#include "test_support.hpp"

namespace flopdyn {
namespace {

using testing::RandomRationals;

SmallLiftData i2_lift() {
  return SmallLiftData::from_permutation(Matrix{{2, 1}, {-1, 0}}, Matrix{{0, 0}, {-1, 0}}, {1, 0}, {"E1", "E2"});
}

SmallLiftData diag_lift() {
  return SmallLiftData::from_permutation(Matrix{{Rational(2), Rational(0)}, {Rational(0), Rational(1, 2)}},
                                         Matrix{{1, 0}, {0, 0}}, {0, 1});
}

TEST(AssemblePsi, I2ReproducesTheFlopMatrix) {
  const Matrix psi = assemble_psi(i2_lift()).psi;
  EXPECT_EQ(psi, i2_matrix());
  EXPECT_EQ(psi, compose_to_matrix(i2_rules(), 2));
}

TEST(AssemblePsi, FixtureFileMatchesInlineData) {
  const SmallLiftData file = load_lift(testing::data_path("i2-lift.json"));
  EXPECT_EQ(assemble_psi(file).psi, assemble_psi(i2_lift()).psi);
  EXPECT_EQ(file.exceptional_names, (std::vector<std::string>{"E1", "E2"}));
}

TEST(AssemblePsi, TrivialLift) {
  const Matrix phi{{2, 1}, {-1, 0}};
  const Matrix psi = assemble_psi(SmallLiftData::from_permutation(phi, Matrix(2, 2), {0, 1})).psi;
  Matrix expected = Matrix::identity(4);
  expected.set_block(0, 0, phi);
  EXPECT_EQ(psi, expected);
}

TEST(AssemblePsi, DirectPlacement) {
  const Matrix expected{{Rational(2), Rational(0), Rational(0), Rational(0)},
                        {Rational(0), Rational(1, 2), Rational(0), Rational(0)},
                        {Rational(-1), Rational(0), Rational(1), Rational(0)},
                        {Rational(0), Rational(0), Rational(0), Rational(1)}};
  EXPECT_EQ(assemble_psi(diag_lift()).psi, expected);
}

TEST(AssemblePsi, ShapeErrors) {
  SmallLiftData bad = i2_lift();
  bad.k_op = Matrix(2, 3);
  EXPECT_THROW(assemble_psi(bad), DimensionError);
  EXPECT_THROW(permutation_matrix({0, 0}), ConfigError);
  bad = i2_lift();
  bad.perm = Matrix{{1, 1}, {0, 0}};
  EXPECT_THROW(validate(bad), ConfigError);
}

TEST(AssemblePsi, SpectrumIsUnionOfBlocks) {
  RandomRationals rng(401);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng.index(3));
    const std::size_t e = 1 + static_cast<std::size_t>(rng.index(3));
    const SmallLiftData data = SmallLiftData::from_permutation(rng.matrix(d, d), rng.matrix(e, d), rng.permutation(e));
    const Matrix psi = assemble_psi(data).psi;
    EXPECT_EQ(psi.block(0, d, d, e), Matrix(d, e));
    EXPECT_EQ(testing::cofactor_char_poly(psi), char_poly(data.phi) * char_poly(data.perm));
  }
}

TEST(LiftEigenvector, Diagonal) {
  const Vector w = lift_eigenvector(diag_lift(), 2, vec({1, 0}));
  EXPECT_EQ(w, vec({1, 0, -1, 0}));
  EXPECT_EQ(assemble_psi(diag_lift()).psi * w, vec({2, 0, -2, 0}));
}

TEST(LiftEigenvector, ZeroKGivesPaddedVector) {
  const auto data = SmallLiftData::from_permutation(Matrix{{3, 0}, {0, 1}}, Matrix(1, 2), {0});
  EXPECT_EQ(lift_eigenvector(data, 3, vec({1, 0})), vec({1, 0, 0}));
}

TEST(LiftEigenvector, CollisionWithPermutationSpectrum) {
  EXPECT_THROW(lift_eigenvector(i2_lift(), 1, vec({1, -1})), SingularResolventError);
}

TEST(LiftEigenvector, RejectsNonEigenvectors) {
  EXPECT_THROW(lift_eigenvector(diag_lift(), 2, vec({0, 1})), NotEigenvectorError);
  EXPECT_THROW(lift_eigenvector(diag_lift(), 2, vec({0, 0})), NotEigenvectorError);
}

TEST(LiftEigenvector, RandomTriangularPhiSatisfiesEigenEquation) {
  RandomRationals rng(402);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.index(2));
    const std::size_t e = 1 + static_cast<std::size_t>(rng.index(3));
    Matrix tri = rng.matrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) tri(i, j) = 0;
    const Matrix s = rng.invertible(d);
    const Matrix phi = s * tri * inverse(s);
    const auto data = SmallLiftData::from_permutation(phi, rng.matrix(e, d), rng.permutation(e));
    const Rational lambda = tri(0, 0);
    const Vector v = s.column(0);  // eigenvector of phi for tri(0,0)
    const Matrix psi = assemble_psi(data).psi;
    try {
      const Vector w = lift_eigenvector(data, lambda, v);
      EXPECT_EQ(psi * w, lambda * w);
      ++checked;
    } catch (const SingularResolventError&) {
      EXPECT_TRUE(determinant(lambda * Matrix::identity(e) - data.perm).is_zero());
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(DNonnegative, Examples) {
  EXPECT_TRUE(check_d_nonnegative(SmallLiftData::from_permutation(Matrix::identity(2), Matrix(1, 2), {0}),
                                  vec({-5, 3})));
  EXPECT_FALSE(check_d_nonnegative(i2_lift(), vec({1, -1})));
  EXPECT_TRUE(check_d_nonnegative(i2_lift(), vec({-1, 0})));
}

TEST(TransformZariski, ZeroK) {
  const auto data = SmallLiftData::from_permutation(Matrix{{2, 1}, {1, 1}}, Matrix(1, 2), {0});
  const Vector d = vec({1, 2});
  const ZariskiTransform t = transform_zariski(data, Vector(3), d);
  EXPECT_EQ(t.negative, Vector(3));
  EXPECT_EQ(t.positive, assemble_psi(data).psi * pull_back(data, d));
}

TEST(TransformZariski, DiagonalExceptionalCorrection) {
  const ZariskiTransform t = transform_zariski(diag_lift(), Vector(4), vec({1, 0}));
  EXPECT_EQ(t.negative, vec({0, 0, 1, 0}));
  EXPECT_EQ(t.positive + t.negative, pull_back(diag_lift(), diag_lift().phi * vec({1, 0})));
  EXPECT_THROW(transform_zariski(diag_lift(), Vector(4), vec({-1, 0})), HypothesisViolationError);
}

TEST(TransformZariski, I2) {
  const SmallLiftData data = i2_lift();
  const Vector d = vec({-1, 0});
  const ZariskiTransform t = transform_zariski(data, Vector(4), d);
  // independent sides: psi f^*d by hand, f^* phi d by hand
  EXPECT_EQ(t.positive, vec({-2, 1, 0, -1}));
  EXPECT_EQ(t.negative, vec({0, 0, 0, 1}));
  EXPECT_EQ(t.positive + t.negative, vec({-2, 1, 0, 0}));
  EXPECT_THROW(transform_zariski(data, Vector(4), vec({1, -1})), HypothesisViolationError);
}

TEST(TransformZariski, ReconstructionOnRandomData) {
  RandomRationals rng(403);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng.index(3));
    const std::size_t e = 1 + static_cast<std::size_t>(rng.index(3));
    Matrix k = rng.matrix(e, d);
    const Vector cls = rng.vector(d);
    // flip rows of K so that K d >= 0
    const Vector kd = k * cls;
    for (std::size_t i = 0; i < e; ++i)
      if (kd[i] < 0)
        for (std::size_t j = 0; j < d; ++j) k(i, j) = -k(i, j);
    const auto data = SmallLiftData::from_permutation(rng.invertible(d), k, rng.permutation(e));
    Vector n(d + e);
    for (std::size_t i = d; i < d + e; ++i) n[i] = abs(rng.rational());
    const ZariskiTransform t = transform_zariski(data, n, cls);
    EXPECT_EQ(t.positive + t.negative, pull_back(data, data.phi * cls));
  }
}

TEST(Dominant, DiagonalFixtureExact) {
  const DominantExact r = dominant_p_sigma(diag_lift());
  EXPECT_EQ(r.lambda, Rational(2));
  EXPECT_EQ(r.d_phi, vec({1, 0}));
  ASSERT_TRUE(r.d_phi_inverse.has_value());
  EXPECT_EQ(*r.d_phi_inverse, vec({0, 1}));
  EXPECT_EQ(r.d_psi, vec({1, 0, -1, 0}));
  EXPECT_EQ(r.power_limit, vec({1, 0, -1, 0}));
  EXPECT_TRUE(r.agree);
  EXPECT_TRUE(r.converged);
}

TEST(Dominant, DiagonalIteratesMatchClosedForm) {
  // lambda^{-n} psi^n (1,1,0,0) = (1, 4^-n, -(1 - 2^-n), 0)
  const Matrix psi = assemble_psi(diag_lift()).psi;
  Vector x = vec({1, 1, 0, 0});
  for (long n = 1; n <= 30; ++n) {
    x = Rational(1, 2) * (psi * x);
    const Rational half_n = pow(Rational(1, 2), n);
    EXPECT_EQ(x, (Vector{Rational(1), half_n * half_n, -(Rational(1) - half_n), Rational(0)}));
  }
}

TEST(Dominant, NoExceptionalCorrection) {
  const auto data = SmallLiftData::from_permutation(Matrix{{3, 0}, {0, 1}}, Matrix(2, 2), {1, 0});
  EXPECT_EQ(dominant_p_sigma(data).d_psi, vec({1, 0, 0, 0}));
}

TEST(Dominant, NoDominantEigenvalue) {
  EXPECT_THROW(dominant_p_sigma(i2_lift()), NoDominantEigenvalueError);
}

TEST(Dominant, IrrationalNeedsFloatMode) {
  const SmallLiftData golden = load_lift(testing::data_path("synthetic-golden.json"));
  EXPECT_THROW(dominant_p_sigma(golden), IrrationalSpectrumError);
  const DominantApprox r = dominant_p_sigma_float(golden);
  EXPECT_NEAR(r.lambda, (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_LT(r.residual, kFloatResidualTolerance);
  EXPECT_LT(r.max_deviation, kFloatAgreementTolerance);
  EXPECT_TRUE(r.converged);
  // independent residual from the assembled matrix
  const Matrix psi = assemble_psi(golden).psi;
  double worst = 0;
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    double acc = -r.lambda * r.d_psi[i];
    for (std::size_t j = 0; j < psi.cols(); ++j) acc += psi(i, j).to_double() * r.d_psi[j];
    worst = std::max(worst, std::abs(acc));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Normalize, FirstNonzeroIsOne) {
  EXPECT_EQ(normalize_first_nonzero(vec({0, -2, 4})), vec({0, 1, -2}));
  EXPECT_EQ(normalize_first_nonzero(vec({0, 0})), vec({0, 0}));
}

}  // namespace
}  // namespace flopdyn
