#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flopdyn/config.hpp"
#include "flopdyn/small_lift.hpp"

namespace flopdyn {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitHypothesisViolation = 3;

enum class TableFormat { Csv, Json };

int cmd_table(const FamilyConfig& cfg, std::size_t n_max, TableFormat format, bool check_closed_form,
              std::ostream& out, std::ostream& err);

// Prints the sigma report for one curve, or for every curve when `curve` is
// empty.
int cmd_sigma(const FamilyConfig& cfg, const std::optional<std::string>& curve, std::size_t n_max,
              std::ostream& out, std::ostream& err);

int cmd_chambers(const FamilyConfig& cfg, std::size_t depth, const std::optional<std::string>& svg_path,
                 std::ostream& out, std::ostream& err);

enum class LiftAction { Assemble, Eigen, Zariski, Dominant };

struct LiftOptions {
  std::optional<Rational> lambda;
  std::optional<Vector> vector;
  std::optional<Vector> class_d;
  std::optional<Vector> n_sigma;
  bool float_mode = false;
};

int cmd_lift(const SmallLiftData& data, LiftAction action, const LiftOptions& opts, std::ostream& out,
             std::ostream& err);

// Full command line including argv[0]: `flopdyn table|sigma|chambers|lift ...`. Typed errors
// are reported on `err` and mapped to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Comma-separated rationals, e.g. "1,-1/2,0".
Vector parse_vector_arg(const std::string& text);

}  // namespace flopdyn
