#include "flopdyn/small_lift.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "flopdyn/errors.hpp"
#include "flopdyn/polynomial.hpp"

namespace flopdyn {
namespace {

constexpr double kRealTolerance = 1e-9;
constexpr double kRootMatchTolerance = 1e-7;
constexpr std::size_t kMaxIterations = 10000;

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_double();
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

struct NumericSpectrum {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  Eigen::Index dominant = 0;
  std::optional<Eigen::Index> smallest;  // unique real eigenvalue of least modulus
};

bool is_real(std::complex<double> z) { return std::fabs(z.imag()) <= kRealTolerance * std::max(1.0, std::abs(z)); }

NumericSpectrum analyze_spectrum(const Matrix& phi) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(phi));
  if (solver.info() != Eigen::Success) throw NoDominantEigenvalueError("eigenvalue computation failed");
  NumericSpectrum s{solver.eigenvalues(), solver.eigenvectors(), 0, std::nullopt};
  const Eigen::Index n = s.values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return std::abs(s.values(a)) > std::abs(s.values(b)); });

  s.dominant = order.front();
  const std::complex<double> top = s.values(s.dominant);
  if (!is_real(top) || top.real() <= 1.0) {
    throw NoDominantEigenvalueError("phi has no real eigenvalue of maximal modulus greater than 1");
  }
  if (n > 1 && std::abs(s.values(order[1])) >= top.real() * (1.0 - kRealTolerance)) {
    throw NoDominantEigenvalueError("the eigenvalue of maximal modulus is not unique");
  }
  if (n > 1) {
    const Eigen::Index low = order.back();
    const bool unique_low = std::abs(s.values(order[static_cast<std::size_t>(n - 2)])) >
                            std::abs(s.values(low)) * (1.0 + kRealTolerance);
    if (unique_low && is_real(s.values(low))) s.smallest = low;
  }
  return s;
}

std::optional<Rational> match_rational_root(const RootFactorization& roots, double approx) {
  for (const auto& r : roots.roots) {
    if (std::fabs(r.value.to_double() - approx) <= kRootMatchTolerance * std::max(1.0, std::fabs(approx))) {
      return r.value;
    }
  }
  return std::nullopt;
}

Vector eigenvector(const Matrix& phi, const Rational& lambda) {
  const auto kernel = nullspace(phi - lambda * Matrix::identity(phi.rows()));
  if (kernel.size() != 1) throw NoDominantEigenvalueError("eigenspace of " + lambda.to_string() + " is not a line");
  return normalize_first_nonzero(kernel.front());
}

Rational max_abs_diff(const Vector& a, const Vector& b) {
  Rational m;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, abs(a[i] - b[i]));
  return m;
}

Eigen::VectorXd normalize_first_nonzero(const Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::fabs(v(i)) > 1e-12 * std::max(1.0, v.cwiseAbs().maxCoeff())) return v / v(i);
  }
  return v;
}

}  // namespace

Matrix permutation_matrix(const std::vector<std::size_t>& images) {
  const std::size_t e = images.size();
  std::vector<bool> seen(e, false);
  Matrix p(e, e);
  for (std::size_t i = 0; i < e; ++i) {
    if (images[i] >= e || seen[images[i]]) throw ConfigError("exceptional permutation is not a bijection");
    seen[images[i]] = true;
    p(images[i], i) = 1;
  }
  return p;
}

SmallLiftData SmallLiftData::from_permutation(Matrix phi, Matrix k_op, const std::vector<std::size_t>& images,
                                              std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 1; i <= images.size(); ++i) names.push_back("E" + std::to_string(i));
  }
  SmallLiftData data{std::move(phi), std::move(k_op), permutation_matrix(images), std::move(names)};
  validate(data);
  return data;
}

void validate(const SmallLiftData& data) {
  if (!data.phi.is_square() || data.phi.rows() == 0) throw DimensionError("phi must be a nonempty square matrix");
  if (!data.perm.is_square()) throw DimensionError("the exceptional permutation must be square");
  const std::size_t d = data.base_dim();
  const std::size_t e = data.exceptional_dim();
  if (data.k_op.rows() != e || data.k_op.cols() != d) {
    throw DimensionError("K must be " + std::to_string(e) + "x" + std::to_string(d) + ", got " +
                         std::to_string(data.k_op.rows()) + "x" + std::to_string(data.k_op.cols()));
  }
  if (!data.exceptional_names.empty() && data.exceptional_names.size() != e) {
    throw DimensionError("one name per exceptional divisor is required");
  }
  for (std::size_t i = 0; i < e; ++i) {
    std::size_t row_ones = 0;
    std::size_t col_ones = 0;
    for (std::size_t j = 0; j < e; ++j) {
      for (const Rational* x : {&data.perm(i, j), &data.perm(j, i)}) {
        if (!x->is_zero() && *x != Rational(1)) throw ConfigError("permutation matrix entries must be 0 or 1");
      }
      row_ones += data.perm(i, j).is_zero() ? 0 : 1;
      col_ones += data.perm(j, i).is_zero() ? 0 : 1;
    }
    if (row_ones != 1 || col_ones != 1) throw ConfigError("permutation matrix needs one 1 per row and column");
  }
}

LiftedMap assemble_psi(const SmallLiftData& data) {
  validate(data);
  const std::size_t d = data.base_dim();
  const std::size_t e = data.exceptional_dim();
  Matrix psi(d + e, d + e);
  psi.set_block(0, 0, data.phi);
  psi.set_block(d, 0, Rational(-1) * data.k_op);
  psi.set_block(d, d, data.perm);
  return {std::move(psi)};
}

Vector lift_eigenvector(const SmallLiftData& data, const Rational& lambda, const Vector& v) {
  validate(data);
  if (v.size() != data.base_dim()) throw DimensionError("eigenvector length does not match phi");
  if (is_zero(v) || data.phi * v != lambda * v) {
    throw NotEigenvectorError(to_string(v) + " is not an eigenvector of phi for " + lambda.to_string());
  }
  const Vector correction = solve_resolvent(data.perm, lambda, data.k_op * v);
  Vector w = v;
  for (const auto& c : correction) w.push_back(-c);
  if (assemble_psi(data).psi * w != lambda * w) throw std::logic_error("lift_eigenvector: verification failed");
  return w;
}

bool check_d_nonnegative(const SmallLiftData& data, const Vector& d) {
  if (d.size() != data.k_op.cols()) throw DimensionError("class length does not match K");
  const Vector kd = data.k_op * d;
  return std::all_of(kd.begin(), kd.end(), [](const Rational& x) { return x.sign() >= 0; });
}

Vector pull_back(const SmallLiftData& data, const Vector& d) {
  if (d.size() != data.base_dim()) throw DimensionError("class length does not match phi");
  Vector out = d;
  out.resize(data.base_dim() + data.exceptional_dim());
  return out;
}

ZariskiTransform transform_zariski(const SmallLiftData& data, const Vector& n_sigma_coeffs, const Vector& class_d) {
  validate(data);
  const std::size_t d = data.base_dim();
  const std::size_t e = data.exceptional_dim();
  if (n_sigma_coeffs.size() != d + e) throw DimensionError("N_sigma must be a vector on Y");
  if (!check_d_nonnegative(data, class_d)) {
    throw HypothesisViolationError("phi is not D-non-negative: K D = " + to_string(data.k_op * class_d));
  }
  const Matrix psi = assemble_psi(data).psi;
  const Vector kd = data.k_op * class_d;
  Vector kd_on_y(d + e);
  for (std::size_t i = 0; i < e; ++i) kd_on_y[d + i] = kd[i];

  ZariskiTransform out;
  out.negative = psi * n_sigma_coeffs + kd_on_y;
  out.positive = psi * (pull_back(data, class_d) - n_sigma_coeffs);
  if (out.positive + out.negative != pull_back(data, data.phi * class_d)) {
    throw std::logic_error("transform_zariski: f^* phi_* D != P' + N'");
  }
  return out;
}

Vector normalize_first_nonzero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return (Rational(1) / x) * v;
  }
  return v;
}

DominantExact dominant_p_sigma(const SmallLiftData& data) {
  validate(data);
  const NumericSpectrum spectrum = analyze_spectrum(data.phi);
  const RootFactorization roots = rational_roots(char_poly(data.phi));
  const auto lambda = match_rational_root(roots, spectrum.values(spectrum.dominant).real());
  if (!lambda) {
    throw IrrationalSpectrumError("dominant eigenvalue " + std::to_string(spectrum.values(spectrum.dominant).real()) +
                                  " is irrational; rerun in float mode");
  }

  DominantExact out;
  out.lambda = *lambda;
  out.d_phi = eigenvector(data.phi, *lambda);
  if (spectrum.smallest) {
    if (const auto mu = match_rational_root(roots, spectrum.values(*spectrum.smallest).real())) {
      out.d_phi_inverse = eigenvector(data.phi, *mu);
    }
  }
  out.d_psi = normalize_first_nonzero(lift_eigenvector(data, *lambda, out.d_phi));

  // lambda^{-n} psi^n x converges to the spectral projection of x onto the
  // lambda-eigenline, q(psi) x / q(lambda) with chi_psi = (t - lambda) q.
  const Matrix psi = assemble_psi(data).psi;
  const Vector start = pull_back(data, out.d_phi_inverse ? out.d_phi + *out.d_phi_inverse : out.d_phi);
  const auto [q, rem] = char_poly(psi).divmod(Polynomial::linear_factor(*lambda));
  if (!rem.is_zero() || q(*lambda).is_zero()) throw std::logic_error("dominant eigenvalue is not a simple root");
  const Vector limit = (Rational(1) / q(*lambda)) * (q(psi) * start);
  out.power_limit = normalize_first_nonzero(limit);
  out.agree = out.power_limit == out.d_psi;

  const Rational tolerance(1, 1000000000000LL);
  const Rational step = Rational(1) / *lambda;
  Vector y = start;
  for (std::size_t n = 1; n <= kMaxIterations; ++n) {
    y = step * (psi * y);
    if (max_abs_diff(y, limit) < tolerance) {
      out.iterations = n;
      out.converged = true;
      break;
    }
  }
  return out;
}

DominantApprox dominant_p_sigma_float(const SmallLiftData& data) {
  validate(data);
  const NumericSpectrum spectrum = analyze_spectrum(data.phi);
  const std::size_t d = data.base_dim();
  const std::size_t e = data.exceptional_dim();
  const Eigen::MatrixXd psi = to_eigen(assemble_psi(data).psi);

  DominantApprox out;
  out.lambda = spectrum.values(spectrum.dominant).real();
  const Eigen::VectorXd v = normalize_first_nonzero(Eigen::VectorXd(spectrum.vectors.col(spectrum.dominant).real()));
  out.d_phi = to_std(v);

  const auto de = static_cast<Eigen::Index>(d);
  const auto ee = static_cast<Eigen::Index>(e);
  Eigen::VectorXd w(de + ee);
  w.head(de) = v;
  if (e > 0) {
    const Eigen::MatrixXd shifted = out.lambda * Eigen::MatrixXd::Identity(ee, ee) - to_eigen(data.perm);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(shifted);
    if (!lu.isInvertible()) throw SingularResolventError("lambda is an eigenvalue of the permutation block");
    w.tail(ee) = -lu.solve(to_eigen(data.k_op) * v);
  }
  w = normalize_first_nonzero(w);
  out.d_psi = to_std(w);
  out.residual = (psi * w - out.lambda * w).norm();

  Eigen::VectorXd x = Eigen::VectorXd::Zero(de + ee);
  x.head(de) = v;
  if (spectrum.smallest) {
    x.head(de) += normalize_first_nonzero(Eigen::VectorXd(spectrum.vectors.col(*spectrum.smallest).real()));
  }
  for (std::size_t n = 1; n <= kMaxIterations; ++n) {
    Eigen::VectorXd next = psi * x;
    Eigen::Index arg = 0;
    next.cwiseAbs().maxCoeff(&arg);
    next /= next(arg);
    const double delta = (next - x).cwiseAbs().maxCoeff();
    x = next;
    if (delta < kPowerIterationStep) {
      out.iterations = n;
      out.converged = true;
      break;
    }
  }
  x = normalize_first_nonzero(x);
  out.power_limit = to_std(x);
  out.max_deviation = (x - w).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace flopdyn
