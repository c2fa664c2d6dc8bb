#include "flopdyn/json_io.hpp"

#include "flopdyn/errors.hpp"

namespace flopdyn {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Vector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
  return arr;
}

Json to_json(const Ray2& r) {
  Json arr = Json::array();
  for (const mpz_class* c : {&r.x, &r.y}) {
    if (c->fits_slong_p()) arr.push_back(static_cast<std::int64_t>(c->get_si()));
    else arr.push_back(c->get_str());
  }
  return arr;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or a fraction string, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows, got " + j.dump());
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("ragged matrix rows");
  }
  return Matrix::from_rows(rows);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace flopdyn
