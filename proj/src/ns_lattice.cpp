#include "flopdyn/ns_lattice.hpp"

#include "flopdyn/errors.hpp"

namespace flopdyn {

RelativeNS::RelativeNS(std::size_t rank, std::vector<std::string> curve_names, Matrix pairing, bool curves_span)
    : rank_(rank), names_(std::move(curve_names)), pairing_(std::move(pairing)) {
  if (rank_ == 0) throw DimensionError("RelativeNS: rank must be positive");
  if (pairing_.rows() != rank_ || pairing_.cols() != names_.size()) {
    throw DimensionError("RelativeNS: pairing must be rank x curves (" + std::to_string(rank_) + "x" +
                         std::to_string(names_.size()) + "), got " + std::to_string(pairing_.rows()) + "x" +
                         std::to_string(pairing_.cols()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw ConfigError("RelativeNS: duplicate curve name " + names_[i]);
    }
  }
  if (curves_span && flopdyn::rank(pairing_) != names_.size()) {
    throw ConfigError("RelativeNS: pairing does not have full column rank");
  }
}

RelativeNS RelativeNS::dual_basis(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("C" + std::to_string(i));
  return RelativeNS(rank, std::move(names), Matrix::identity(rank));
}

std::size_t RelativeNS::curve_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw IndexError("unknown curve '" + name + "'");
}

Vector RelativeNS::intersections(const DivisorClass& d) const {
  if (d.coords.size() != rank_) throw DimensionError("divisor class length does not match rank");
  return pairing_.transpose() * d.coords;
}

Rational pair(const RelativeNS& ns, const DivisorClass& d, std::size_t curve) {
  if (curve >= ns.curve_count()) throw IndexError("curve index " + std::to_string(curve) + " out of range");
  if (d.coords.size() != ns.rank()) throw DimensionError("divisor class length does not match rank");
  Rational s;
  for (std::size_t i = 0; i < ns.rank(); ++i) s += d.coords[i] * ns.pairing()(i, curve);
  return s;
}

Ray2 Ray2::primitive(const Vector& v) {
  if (v.size() != 2) throw DimensionError("Ray2: expected a rank-2 vector");
  if (is_zero(v)) throw DimensionError("Ray2: zero vector spans no ray");
  mpz_class l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class x = (v[0] * Rational(l)).numerator();
  mpz_class y = (v[1] * Rational(l)).numerator();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return {x / g, y / g};
}

Cone2D::Cone2D(const Vector& a, const Vector& b) : Cone2D(Ray2::primitive(a), Ray2::primitive(b)) {}

Cone2D::Cone2D(Ray2 a, Ray2 b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.x * b_.y - a_.y * b_.x == 0) throw DimensionError("Cone2D: rays are linearly dependent");
  mpz_class ga, gb;
  mpz_gcd(ga.get_mpz_t(), a_.x.get_mpz_t(), a_.y.get_mpz_t());
  mpz_gcd(gb.get_mpz_t(), b_.x.get_mpz_t(), b_.y.get_mpz_t());
  if (ga != 1 || gb != 1) throw DimensionError("Cone2D: ray generators must be primitive");
}

bool cone_contains(const Cone2D& c, const Vector& v) {
  if (v.size() != 2) throw DimensionError("cone_contains: expected a rank-2 vector");
  const Matrix basis = Matrix::from_columns({c.ray_a().to_vector(), c.ray_b().to_vector()});
  const Vector coeffs = solve(basis, v);
  return coeffs[0].sign() >= 0 && coeffs[1].sign() >= 0;
}

std::size_t shared_rays(const Cone2D& c1, const Cone2D& c2) {
  std::size_t n = 0;
  for (const Ray2* r : {&c1.ray_a(), &c1.ray_b()}) {
    if (*r == c2.ray_a() || *r == c2.ray_b()) ++n;
  }
  return n;
}

HalfPlane HalfPlane::bounded_by(const Ray2& boundary, const Vector& inside) {
  Vector normal{Rational(mpz_class(-boundary.y)), Rational(boundary.x)};
  const int side = dot(normal, inside).sign();
  if (side == 0) throw DimensionError("HalfPlane: interior point lies on the boundary line");
  if (side < 0) normal = Rational(-1) * normal;
  return HalfPlane(std::move(normal));
}

bool HalfPlane::contains(const Vector& v) const { return dot(normal_, v).sign() >= 0; }

bool HalfPlane::contains(const Cone2D& c) const {
  return contains(c.ray_a().to_vector()) && contains(c.ray_b().to_vector());
}

std::optional<Ray2> fixed_ray(const Matrix& phi) {
  if (phi.rows() != 2 || phi.cols() != 2) throw DimensionError("fixed_ray: expected a 2x2 matrix");
  const auto kernel = nullspace(phi - Matrix::identity(2));
  if (kernel.size() != 1) return std::nullopt;
  Ray2 r = Ray2::primitive(kernel.front());
  if (r.x < 0 || (r.x == 0 && r.y < 0)) {
    r.x = -r.x;
    r.y = -r.y;
  }
  return r;
}

ChamberFan chamber_fan(const Matrix& phi, const Cone2D& nef, std::size_t depth) {
  if (phi.rows() != 2 || phi.cols() != 2) throw DimensionError("chamber_fan: phi must be 2x2");
  if (determinant(phi).is_zero()) throw DimensionError("chamber_fan: phi is singular");
  ChamberFan fan;
  fan.depth = depth;
  fan.chambers.push_back(nef);
  Ray2 a = nef.ray_a();
  Ray2 b = nef.ray_b();
  for (std::size_t k = 1; k <= depth; ++k) {
    a = Ray2::primitive(phi * a.to_vector());
    b = Ray2::primitive(phi * b.to_vector());
    fan.chambers.emplace_back(a, b);
  }
  fan.accumulation_ray = fixed_ray(phi);
  return fan;
}

}  // namespace flopdyn
