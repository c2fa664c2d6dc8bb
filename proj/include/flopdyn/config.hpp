#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flopdyn/flop_dynamics.hpp"
#include "flopdyn/json_io.hpp"
#include "flopdyn/ns_lattice.hpp"
#include "flopdyn/small_lift.hpp"

namespace flopdyn {

// Parsed family description file. Curve references in the file are 1-based
// indices or curve names; permutations are 1-based arrays.
struct FamilyConfig {
  RelativeNS ns;
  std::vector<Rule> rules;
  AugmentedClass seed;
  std::optional<Matrix> matrix_override;  // "matrix": explicit action on augmented classes
  std::optional<DivisorClass> boundary;   // "boundary": class in N^1 coordinates
  std::optional<Cone2D> nef;              // "nef": two rays in intersection coordinates

  // The action on augmented classes: the override, else the composed rules.
  Matrix dynamics() const;
  // Block of dynamics() acting on intersection numbers.
  Matrix intersection_action() const;
  Cone2D nef_cone() const;
  // The explicit boundary, else the primitive direction the orbit moves in
  // (or the seed direction when the orbit is stationary).
  DivisorClass boundary_class() const;
};

FamilyConfig parse_family(const Json& j);
FamilyConfig load_family(const std::string& path);

// {phi, k, perm (1-based images), names}
SmallLiftData parse_lift(const Json& j);
SmallLiftData load_lift(const std::string& path);

Json read_json_file(const std::string& path);

}  // namespace flopdyn
