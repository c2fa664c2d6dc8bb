#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flopdyn/matrix.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

// A class in N^1(X/S), in the chosen basis.
struct DivisorClass {
  Vector coords;
};

// N^1(X/S) together with the tracked contracted curves. Entry (i, j) of the
// pairing is F_i . C_j for the basis divisors F_i.
class RelativeNS {
 public:
  // Validates shapes; when `curves_span` is set the pairing must have full
  // column rank (the curves span N_1(X/S)).
  RelativeNS(std::size_t rank, std::vector<std::string> curve_names, Matrix pairing, bool curves_span = true);

  // Rank-n lattice with curves dual to the basis, named C1..Cn.
  static RelativeNS dual_basis(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t curve_count() const { return names_.size(); }
  const std::vector<std::string>& curve_names() const { return names_; }
  const Matrix& pairing() const { return pairing_; }

  // Throws IndexError for unknown names.
  std::size_t curve_index(const std::string& name) const;

  // (D.C_1, ..., D.C_k)
  Vector intersections(const DivisorClass& d) const;

 private:
  std::size_t rank_;
  std::vector<std::string> names_;
  Matrix pairing_;
};

// Exact intersection number D.C_curve.
Rational pair(const RelativeNS& ns, const DivisorClass& d, std::size_t curve);

// Primitive integer vector in a rank-2 lattice.
struct Ray2 {
  mpz_class x;
  mpz_class y;

  // Positive rescaling of a nonzero rational vector to a primitive vector.
  static Ray2 primitive(const Vector& v);
  Vector to_vector() const { return {Rational(x), Rational(y)}; }
  friend bool operator==(const Ray2& a, const Ray2& b) { return a.x == b.x && a.y == b.y; }
};

// Strictly convex cone spanned by two independent rays.
class Cone2D {
 public:
  Cone2D(const Vector& a, const Vector& b);
  Cone2D(Ray2 a, Ray2 b);

  const Ray2& ray_a() const { return a_; }
  const Ray2& ray_b() const { return b_; }
  friend bool operator==(const Cone2D&, const Cone2D&) = default;

 private:
  Ray2 a_;
  Ray2 b_;
};

// v is a nonnegative combination of the two boundary rays.
bool cone_contains(const Cone2D& c, const Vector& v);

// Number of boundary rays two cones have in common.
std::size_t shared_rays(const Cone2D& c1, const Cone2D& c2);

// Closed half-plane {v : normal . v >= 0}.
class HalfPlane {
 public:
  // The half-plane bounded by the line through `boundary` that contains `inside`.
  static HalfPlane bounded_by(const Ray2& boundary, const Vector& inside);

  bool contains(const Vector& v) const;
  bool contains(const Cone2D& c) const;
  const Vector& normal() const { return normal_; }

 private:
  explicit HalfPlane(Vector normal) : normal_(std::move(normal)) {}
  Vector normal_;
};

struct ChamberFan {
  std::vector<Cone2D> chambers;         // chambers[k] = phi^k(nef)
  std::optional<Ray2> accumulation_ray;  // unique fixed ray of phi, if any
  std::size_t depth = 0;
};

// Orbit of the nef cone under phi. Throws DimensionError when phi is not an
// invertible 2x2 matrix.
ChamberFan chamber_fan(const Matrix& phi, const Cone2D& nef, std::size_t depth);

// The primitive generator of ker(phi - I) when it is one-dimensional, with
// its first nonzero entry positive.
std::optional<Ray2> fixed_ray(const Matrix& phi);

}  // namespace flopdyn
