#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flopdyn/matrix.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

// Class data of a small lift f: Y -> X of a pseudoautomorphism phi, in the
// splitting N^1(Y) = f^* N^1(X) + V_E. Vectors on Y are laid out as the d
// pulled-back coordinates followed by the e exceptional coordinates.
struct SmallLiftData {
  Matrix phi;    // d x d, action of phi_* on N^1(X)
  Matrix k_op;   // e x d, K = f^* phi_* - psi_* f^*
  Matrix perm;   // e x e permutation matrix of psi_* on the E_i
  std::vector<std::string> exceptional_names;

  std::size_t base_dim() const { return phi.rows(); }
  std::size_t exceptional_dim() const { return perm.rows(); }

  // Builds `perm` from an array sending E_i to E_{images[i]}.
  static SmallLiftData from_permutation(Matrix phi, Matrix k_op, const std::vector<std::size_t>& images,
                                        std::vector<std::string> names = {});
};

// Column i has its single 1 in row images[i]. Throws ConfigError unless
// `images` is a bijection.
Matrix permutation_matrix(const std::vector<std::size_t>& images);

// Throws DimensionError for inconsistent shapes and ConfigError when `perm`
// is not a permutation matrix.
void validate(const SmallLiftData& data);

// psi_* = [[phi, 0], [-K, P]]
struct LiftedMap {
  Matrix psi;
};

LiftedMap assemble_psi(const SmallLiftData& data);

// (v, -(lambda I - P)^{-1} K v), verified to satisfy psi w = lambda w.
// Throws NotEigenvectorError unless phi v = lambda v with v != 0, and
// SingularResolventError when lambda is an eigenvalue of P.
Vector lift_eigenvector(const SmallLiftData& data, const Rational& lambda, const Vector& v);

// K d >= 0 coefficientwise.
bool check_d_nonnegative(const SmallLiftData& data, const Vector& d);

struct ZariskiTransform {
  Vector negative;  // N_sigma(f^* phi_* D)
  Vector positive;  // P_sigma(f^* phi_* D)
};

// Given N_sigma(f^* D) (a vector on Y) and D, returns N' = psi_* N + K D and
// P' = psi_* (f^* D - N). Throws HypothesisViolationError when phi is not
// D-non-negative.
ZariskiTransform transform_zariski(const SmallLiftData& data, const Vector& n_sigma_coeffs, const Vector& class_d);

// f^* D = (D, 0)
Vector pull_back(const SmallLiftData& data, const Vector& d);

// Scales so that the first nonzero entry is 1.
Vector normalize_first_nonzero(const Vector& v);

struct DominantExact {
  Rational lambda;
  Vector d_phi;                        // dominant eigenvector of phi_*
  std::optional<Vector> d_phi_inverse;  // dominant eigenvector of phi_*^{-1}, when rational
  Vector d_psi;                        // lifted eigenvector, normalized
  Vector power_limit;                  // limit of lambda^{-n} psi^n (D_phi + D_phi^{-1}, 0), normalized
  std::size_t iterations = 0;          // exact iterates needed to get within 1e-12
  bool converged = false;
  bool agree = false;                  // d_psi == power_limit exactly
};

struct DominantApprox {
  double lambda = 0;
  std::vector<double> d_phi;
  std::vector<double> d_psi;
  std::vector<double> power_limit;
  double residual = 0;       // ||psi w - lambda w||_2
  double max_deviation = 0;  // max_i |d_psi_i - power_limit_i|
  std::size_t iterations = 0;
  bool converged = false;
};

// Exact dominant-eigenvector computation of P_sigma(f^* D_phi) = D_psi.
// Throws NoDominantEigenvalueError when phi has no unique real eigenvalue of
// maximal modulus greater than 1, IrrationalSpectrumError when that
// eigenvalue is irrational.
DominantExact dominant_p_sigma(const SmallLiftData& data);

// Double-precision variant for irrational dominant eigenvalues.
DominantApprox dominant_p_sigma_float(const SmallLiftData& data);

inline constexpr double kFloatResidualTolerance = 1e-9;
inline constexpr double kPowerIterationStep = 1e-12;
inline constexpr double kFloatAgreementTolerance = 1e-8;

}  // namespace flopdyn
