#pragma once

#include <json.hpp>

#include "flopdyn/matrix.hpp"
#include "flopdyn/ns_lattice.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

using Json = nlohmann::ordered_json;

// Fractions serialize as "p/q" strings, integers as "p".
Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
// Integer pair; entries that do not fit in 64 bits become strings.
Json to_json(const Ray2& r);

// Accepts JSON integers or fraction strings. Throws ParseError otherwise.
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

// Serialized form of every report: two-space indent plus trailing newline.
std::string dump(const Json& j);

}  // namespace flopdyn
