#include "flopdyn/config.hpp"

#include <fstream>
#include <sstream>

#include "flopdyn/errors.hpp"

namespace flopdyn {
namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t positive_index(const Json& j, std::size_t count, const std::string& what) {
  if (!j.is_number_integer()) throw ConfigError(what + " must be a 1-based integer, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < 1 || static_cast<std::size_t>(v) > count) throw IndexError(what + " " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v - 1);
}

std::size_t curve_ref(const RelativeNS& ns, const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (std::size_t i = 0; i < ns.curve_count(); ++i) {
      if (ns.curve_names()[i] == s) return i;
    }
    // Object keys are always strings; accept "2" as index 2.
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      return positive_index(Json(std::stoll(s)), ns.curve_count(), "curve");
    }
    throw IndexError("unknown curve '" + s + "'");
  }
  return positive_index(j, ns.curve_count(), "curve");
}

std::vector<std::size_t> permutation_from_json(const Json& j, std::size_t count, const std::string& what) {
  if (!j.is_array() || j.size() != count) {
    throw ConfigError(what + " must be an array of " + std::to_string(count) + " 1-based indices");
  }
  std::vector<std::size_t> images;
  for (const auto& x : j) images.push_back(positive_index(x, count, what + " entry"));
  return images;
}

Rule parse_rule(const RelativeNS& ns, const Json& j) {
  const std::string type = require(j, "type").get<std::string>();
  if (type == "flop") {
    FlopRule rule;
    rule.flopped_curve = curve_ref(ns, require(j, "curve"));
    if (j.contains("walls")) {
      const Json& walls = j.at("walls");
      if (!walls.is_object()) throw ConfigError("flop 'walls' must be an object");
      for (const auto& [key, value] : walls.items()) {
        rule.wall_coefficients[curve_ref(ns, Json(key))] = rational_from_json(value);
      }
    }
    validate(rule, ns.curve_count());
    return rule;
  }
  if (type == "involution") {
    InvolutionRule rule{permutation_from_json(require(j, "perm"), ns.curve_count(), "involution perm")};
    validate(rule, ns.curve_count(), true);
    return rule;
  }
  throw ConfigError("unknown rule type '" + type + "'");
}

}  // namespace

Matrix FamilyConfig::dynamics() const {
  return matrix_override ? *matrix_override : compose_to_matrix(rules, ns.curve_count());
}

Matrix FamilyConfig::intersection_action() const {
  const Matrix m = dynamics();
  const std::size_t k = ns.curve_count();
  if (m.block(0, k, k, k) != Matrix(k, k)) {
    throw ConfigError("multiplicities feed into intersection numbers; the action is not a strict transform");
  }
  return m.block(0, 0, k, k);
}

Cone2D FamilyConfig::nef_cone() const {
  if (nef) return *nef;
  return Cone2D(vec({1, 0}), vec({0, 1}));
}

DivisorClass FamilyConfig::boundary_class() const {
  if (boundary) return *boundary;
  const Matrix m = dynamics();
  const Vector h0 = seed.intersections;
  Vector step = AugmentedClass::unstack(m * seed.stacked()).intersections - h0;
  if (is_zero(step)) step = h0;
  if (is_zero(step)) throw ConfigError("cannot infer a boundary class from a numerically trivial seed");
  // Smallest positive integer multiple of the direction.
  mpz_class l = 1;
  for (const auto& c : step) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : step) {
    const mpz_class n = (c * Rational(l)).numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  const Vector direction = (Rational(l) / Rational(g)) * step;
  const Matrix& p = ns.pairing();
  if (!p.is_square() || determinant(p).is_zero()) {
    throw ConfigError("'boundary' is required when the pairing is not invertible");
  }
  return {solve(p.transpose(), direction)};
}

FamilyConfig parse_family(const Json& j) {
  if (!j.is_object()) throw ConfigError("family description must be a JSON object");
  const Json& rank_json = require(j, "rank");
  if (!rank_json.is_number_integer() || rank_json.get<std::int64_t>() < 1) throw ConfigError("'rank' must be a positive integer");
  const auto rank = static_cast<std::size_t>(rank_json.get<std::int64_t>());
  const auto names = require(j, "curves").get<std::vector<std::string>>();
  const bool span = j.value("curves_span", true);
  Matrix pairing = j.contains("pairing") ? matrix_from_json(j.at("pairing")) : Matrix::identity(rank);
  FamilyConfig cfg{RelativeNS(rank, names, std::move(pairing), span), {}, {}, std::nullopt, std::nullopt, std::nullopt};
  const std::size_t k = cfg.ns.curve_count();

  if (j.contains("rules")) {
    for (const auto& r : j.at("rules")) cfg.rules.push_back(parse_rule(cfg.ns, r));
  }
  if (j.contains("matrix")) {
    Matrix m = matrix_from_json(j.at("matrix"));
    if (m.rows() != 2 * k || m.cols() != 2 * k) throw DimensionError("'matrix' must be 2k x 2k for k curves");
    if (!cfg.rules.empty()) throw ConfigError("give either 'rules' or 'matrix', not both");
    cfg.matrix_override = std::move(m);
  }

  const Json& seed = require(j, "seed_class");
  cfg.seed.intersections = vector_from_json(require(seed, "intersections"));
  cfg.seed.multiplicities = seed.contains("multiplicities") ? vector_from_json(seed.at("multiplicities")) : Vector(k);
  if (cfg.seed.intersections.size() != k || cfg.seed.multiplicities.size() != k) {
    throw DimensionError("seed_class vectors must have one entry per curve");
  }

  if (j.contains("boundary")) {
    DivisorClass b{vector_from_json(j.at("boundary"))};
    if (b.coords.size() != rank) throw DimensionError("'boundary' must have 'rank' coordinates");
    cfg.boundary = std::move(b);
  }
  if (j.contains("nef")) {
    const Json& rays = j.at("nef");
    if (!rays.is_array() || rays.size() != 2) throw ConfigError("'nef' must list exactly two rays");
    cfg.nef = Cone2D(vector_from_json(rays[0]), vector_from_json(rays[1]));
  }
  return cfg;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

FamilyConfig load_family(const std::string& path) {
  try {
    return parse_family(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

SmallLiftData parse_lift(const Json& j) {
  if (!j.is_object()) throw ConfigError("lift description must be a JSON object");
  Matrix phi = matrix_from_json(require(j, "phi"));
  const Json& perm_json = require(j, "perm");
  if (!perm_json.is_array()) throw ConfigError("'perm' must be an array");
  const std::size_t e = perm_json.size();
  const auto images = permutation_from_json(perm_json, e, "perm");
  Matrix k = e ? matrix_from_json(require(j, "k")) : Matrix(0, phi.cols());
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return SmallLiftData::from_permutation(std::move(phi), std::move(k), images, std::move(names));
}

SmallLiftData load_lift(const std::string& path) {
  try {
    return parse_lift(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

}  // namespace flopdyn
