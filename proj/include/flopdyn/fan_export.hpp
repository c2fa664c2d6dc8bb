#pragma once

#include <optional>
#include <string>

#include "flopdyn/json_io.hpp"
#include "flopdyn/ns_lattice.hpp"

namespace flopdyn {

// {depth, chambers:[{k, ray_a, ray_b}], accumulation_ray}
Json fan_to_json(const ChamberFan& fan);

// SVG rendering on the fixed viewport [-2,2]^2. The optional half-plane is
// shaded as the pseudoeffective region. Output is byte-stable.
std::string fan_to_svg(const ChamberFan& fan, const std::optional<HalfPlane>& effective);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace flopdyn
