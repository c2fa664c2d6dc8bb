#include "flopdyn/asymptotic.hpp"

#include <algorithm>
#include <stdexcept>

#include "flopdyn/errors.hpp"

namespace flopdyn {
namespace {

constexpr std::size_t kMaxPeriod = 6;

Vector differences(const Vector& s) {
  Vector d;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) d.push_back(s[i + 1] - s[i]);
  return d;
}

Rational from_count(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

// Every subsequence n = r, r+p, r+2p, ... is polynomial in the step index.
std::optional<Classification> classify_quasi_polynomial(const Vector& q) {
  for (std::size_t period = 1; period <= kMaxPeriod; ++period) {
    int max_degree = -1;
    Rational limsup;
    bool have_limit = false;
    bool ok = true;
    for (std::size_t r = 0; r < period && ok; ++r) {
      Vector sub;
      for (std::size_t i = r; i < q.size(); i += period) sub.push_back(q[i]);
      const auto d = polynomial_degree(sub);
      if (!d) {
        ok = false;
        break;
      }
      max_degree = std::max(max_degree, *d);
      // Along this class q grows like (slope/period)*n; v_n = q_n/n tends to that.
      const Rational slope = *d == 1 ? (sub[1] - sub[0]) / from_count(period) : Rational(0);
      if (!have_limit || slope > limsup) limsup = slope;
      have_limit = true;
    }
    if (!ok) continue;
    Classification c;
    if (max_degree >= 2) {
      c.kind = GrowthKind::Divergent;
      c.degree = static_cast<std::size_t>(max_degree - 1);
    } else {
      c.kind = GrowthKind::ConvergentFinite;
      c.limit = limsup;
    }
    return c;
  }
  return std::nullopt;
}

}  // namespace

const Rational& SigmaValue::value() const {
  if (!value_) throw std::logic_error("SigmaValue: infinite value has no rational representative");
  return *value_;
}

std::string SigmaValue::to_string() const { return value_ ? value_->to_string() : "inf"; }

std::optional<int> polynomial_degree(const Vector& seq) {
  Vector cur = seq;
  for (int k = 0;; ++k) {
    if (!cur.empty() && is_zero(cur)) return k - 1;
    if (cur.size() <= 1) return std::nullopt;
    cur = differences(cur);
  }
}

Classification classify_growth(const Vector& values) {
  if (values.empty()) return {};
  if (const auto d = polynomial_degree(values)) {
    Classification c;
    if (*d >= 1) {
      c.kind = GrowthKind::Divergent;
      c.degree = static_cast<std::size_t>(*d);
    } else {
      c.kind = GrowthKind::ConvergentFinite;
      c.limit = values.front();
    }
    return c;
  }
  Vector q;
  for (std::size_t i = 0; i < values.size(); ++i) q.push_back(from_count(i + 1) * values[i]);
  if (auto c = classify_quasi_polynomial(q)) return *c;
  return {};
}

bool SigmaSequence::nondecreasing() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) return false;
  }
  return true;
}

SigmaReport sigma_sequence(const RelativeNS& ns, const DivisorClass& boundary, const AugmentedClass& ample_seed,
                           const Matrix& dynamics, std::size_t n_max) {
  if (n_max == 0) throw DimensionError("sigma_sequence: n_max must be positive");
  if (ample_seed.curve_count() != ns.curve_count() || ample_seed.multiplicities.size() != ns.curve_count()) {
    throw DimensionError("sigma_sequence: seed does not match the tracked curves");
  }
  const Vector target = ns.intersections(boundary);
  const std::vector<AugmentedClass> orbit = iterate(dynamics, ample_seed, n_max);
  const Vector& h0 = orbit.front().intersections;
  const Vector step = orbit[1].intersections - h0;

  SigmaReport report;
  if (!is_zero(step)) {
    // Linear drift: H_n - H_0 == c*n*D with c > 0.
    const auto pivot = std::find_if(target.begin(), target.end(), [](const Rational& x) { return !x.is_zero(); });
    if (pivot == target.end()) throw OrbitMismatchError("boundary class has zero intersection with every curve");
    const auto idx = static_cast<std::size_t>(pivot - target.begin());
    const Rational c = step[idx] / target[idx];
    if (c.sign() <= 0 || step != c * target) {
      throw OrbitMismatchError("orbit step " + to_string(step) + " is not a positive multiple of the boundary class " +
                               to_string(target));
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (orbit[n].intersections != h0 + (c * from_count(n)) * target) {
        throw OrbitMismatchError("orbit leaves the line H_0 + R*D at n = " + std::to_string(n));
      }
    }
    report.relation = {OrbitRelationKind::Linear, c};
  } else {
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (orbit[n].intersections != h0) throw OrbitMismatchError("orbit is neither stationary nor linear");
    }
    const auto pivot = std::find_if(h0.begin(), h0.end(), [](const Rational& x) { return !x.is_zero(); });
    if (pivot == h0.end()) throw OrbitMismatchError("seed class is numerically trivial");
    const auto idx = static_cast<std::size_t>(pivot - h0.begin());
    const Rational t = target[idx] / h0[idx];
    if (t.sign() <= 0 || target != t * h0) {
      throw OrbitMismatchError("stationary orbit but the boundary is not a positive multiple of the seed");
    }
    report.relation = {OrbitRelationKind::Stationary, t};
  }

  for (std::size_t curve = 0; curve < ns.curve_count(); ++curve) {
    SigmaSequence seq;
    seq.curve = curve;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const Rational& mult = orbit[n].multiplicities[curve];
      if (report.relation.kind == OrbitRelationKind::Linear) {
        // D + eps H_0 == eps * H_n with eps = 1/(c n).
        const Rational eps = Rational(1) / (report.relation.rate * from_count(n));
        seq.epsilons.push_back(eps);
        seq.values.push_back(eps * mult);
      } else {
        // D + eps H_0 == (t + eps) H_n with eps = 1/n.
        const Rational eps = Rational(1) / from_count(n);
        seq.epsilons.push_back(eps);
        seq.values.push_back((report.relation.rate + eps) * mult);
      }
    }
    seq.classification = classify_growth(seq.values);
    report.curves.push_back(std::move(seq));
  }
  return report;
}

ZariskiDecomposition n_sigma(const Vector& divisor_class, const std::map<std::string, SigmaValue>& sigma_values,
                             const std::map<std::string, Vector>& divisor_classes) {
  ZariskiDecomposition out;
  out.negative_coeffs = sigma_values;
  bool finite = true;
  for (const auto& [name, value] : sigma_values) {
    if (!value.is_finite()) {
      finite = false;
      continue;
    }
    if (value.value().sign() < 0) throw InvalidSigmaError("negative sigma value for " + name);
  }
  out.defined = finite;
  if (!finite) return out;

  Vector negative(divisor_class.size());
  for (const auto& [name, value] : sigma_values) {
    if (value.value().is_zero()) continue;
    const auto it = divisor_classes.find(name);
    if (it == divisor_classes.end()) throw InvalidSigmaError("no class supplied for divisor " + name);
    if (it->second.size() != divisor_class.size()) throw DimensionError("class of " + name + " has the wrong length");
    negative = negative + value.value() * it->second;
  }
  out.positive_part = divisor_class - negative;
  if (*out.positive_part + negative != divisor_class) throw std::logic_error("n_sigma: reconstruction failed");
  return out;
}

FinitenessVerdict finiteness_guard(const FinitenessEvidence& ev) {
  if (ev.base_is_point) return {true, FinitenessClause::PointBase};
  if (ev.numerically_effective_witness) return {true, FinitenessClause::EffectiveWitness};
  if (ev.codim_image && *ev.codim_image < 2) return {true, FinitenessClause::SmallCodimension};
  return {false, std::nullopt};
}

Rational sigma_bound_point_base(const Rational& d_dot, const Rational& a_dot, const Rational& v_dot) {
  if (v_dot.sign() <= 0) throw InvalidIntersectionError("V.A^{n-1} must be positive, got " + v_dot.to_string());
  return (d_dot + a_dot) / v_dot;
}

}  // namespace flopdyn
