#include "flopdyn/commands.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "flopdyn/asymptotic.hpp"
#include "flopdyn/errors.hpp"
#include "flopdyn/fan_export.hpp"
#include "flopdyn/polynomial.hpp"

namespace flopdyn {
namespace {

bool is_input_error(const Error& e) {
  return dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
         dynamic_cast<const DimensionError*>(&e) || dynamic_cast<const IndexError*>(&e);
}

const char* kind_name(GrowthKind k) {
  switch (k) {
    case GrowthKind::ConvergentFinite: return "ConvergentFinite";
    case GrowthKind::Divergent: return "Divergent";
    case GrowthKind::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

Json sigma_to_json(const RelativeNS& ns, const SigmaReport& report, const SigmaSequence& seq) {
  Json j;
  j["curve"] = ns.curve_names()[seq.curve];
  j["relation"] = {{"kind", report.relation.kind == OrbitRelationKind::Linear ? "linear" : "stationary"},
                   {"rate", to_json(report.relation.rate)}};
  j["values_are"] = "upper bounds realized by orbit representatives";
  j["epsilons"] = to_json(seq.epsilons);
  j["values"] = to_json(seq.values);
  Json c;
  c["kind"] = kind_name(seq.classification.kind);
  if (seq.classification.kind == GrowthKind::Divergent) c["degree"] = seq.classification.degree;
  if (seq.classification.kind == GrowthKind::ConvergentFinite) c["limit"] = to_json(seq.classification.limit);
  j["classification"] = std::move(c);
  j["nondecreasing"] = seq.nondecreasing();
  return j;
}

Json roots_to_json(const RootFactorization& roots) {
  Json arr = Json::array();
  for (const auto& r : roots.roots) arr.push_back({{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}});
  return arr;
}

Vector default_eigenvector(const SmallLiftData& data, const Rational& lambda) {
  const auto kernel = nullspace(data.phi - lambda * Matrix::identity(data.base_dim()));
  if (kernel.size() != 1) {
    throw NotEigenvectorError(lambda.to_string() + " has a " + std::to_string(kernel.size()) +
                              "-dimensional eigenspace; pass --vector");
  }
  return normalize_first_nonzero(kernel.front());
}

Json doubles(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

}  // namespace

Vector parse_vector_arg(const std::string& text) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (v.empty()) throw ParseError("empty vector argument");
  return v;
}

int cmd_table(const FamilyConfig& cfg, std::size_t n_max, TableFormat format, bool check_closed_form,
              std::ostream& out, std::ostream& err) {
  const auto rows = iterate(cfg.dynamics(), cfg.seed, n_max);
  const auto& names = cfg.ns.curve_names();
  if (format == TableFormat::Csv) {
    std::string header = "n";
    for (const auto& n : names) header += "," + n + "·";
    for (const auto& n : names) header += ",mult_" + n;
    out << header << "\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
      out << n;
      for (const auto& x : rows[n].stacked()) out << "," << x;
      out << "\n";
    }
  } else {
    Json j;
    j["curves"] = names;
    Json arr = Json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
      arr.push_back({{"n", n},
                     {"intersections", to_json(rows[n].intersections)},
                     {"multiplicities", to_json(rows[n].multiplicities)}});
    }
    j["rows"] = std::move(arr);
    out << dump(j);
  }
  if (check_closed_form) {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      if (rows[n].curve_count() != 2 || !(rows[n] == i2_closed_form(n))) {
        err << "error: closed form (2n+1, -2n+1, n(n-1)/2, n(n+1)/2) fails at n = " << n << "\n";
        return kExitHypothesisViolation;
      }
    }
    err << "closed form verified for n = 0.." << n_max << "\n";
  }
  return kExitOk;
}

int cmd_sigma(const FamilyConfig& cfg, const std::optional<std::string>& curve, std::size_t n_max,
              std::ostream& out, std::ostream&) {
  std::optional<std::size_t> index;
  if (curve) index = cfg.ns.curve_index(*curve);
  const SigmaReport report = sigma_sequence(cfg.ns, cfg.boundary_class(), cfg.seed, cfg.dynamics(), n_max);
  if (index) {
    out << dump(sigma_to_json(cfg.ns, report, report.curves[*index]));
  } else {
    Json arr = Json::array();
    for (const auto& seq : report.curves) arr.push_back(sigma_to_json(cfg.ns, report, seq));
    out << dump(arr);
  }
  return kExitOk;
}

int cmd_chambers(const FamilyConfig& cfg, std::size_t depth, const std::optional<std::string>& svg_path,
                 std::ostream& out, std::ostream&) {
  if (cfg.ns.rank() != 2 || cfg.ns.curve_count() != 2) {
    throw ConfigError("chambers requires a rank-2 family with two tracked curves");
  }
  const ChamberFan fan = chamber_fan(cfg.intersection_action(), cfg.nef_cone(), depth);
  out << dump(fan_to_json(fan));
  if (svg_path) {
    std::optional<HalfPlane> effective;
    if (fan.accumulation_ray) {
      const Cone2D nef = cfg.nef_cone();
      effective = HalfPlane::bounded_by(*fan.accumulation_ray, nef.ray_a().to_vector() + nef.ray_b().to_vector());
    }
    write_file_atomically(*svg_path, fan_to_svg(fan, effective));
  }
  return kExitOk;
}

int cmd_lift(const SmallLiftData& data, LiftAction action, const LiftOptions& opts, std::ostream& out,
             std::ostream&) {
  Json j;
  switch (action) {
    case LiftAction::Assemble: {
      const Matrix psi = assemble_psi(data).psi;
      const Polynomial chi = char_poly(psi);
      j["action"] = "assemble";
      j["psi"] = to_json(psi);
      j["char_poly"] = chi.to_string();
      j["char_poly_coefficients"] = to_json(chi.coefficients());
      j["rational_eigenvalues"] = roots_to_json(rational_roots(chi));
      break;
    }
    case LiftAction::Eigen: {
      if (!opts.lambda) throw ConfigError("eigen requires --lambda");
      const Vector v = opts.vector ? *opts.vector : default_eigenvector(data, *opts.lambda);
      j["action"] = "eigen";
      j["lambda"] = to_json(*opts.lambda);
      j["eigenvector"] = to_json(v);
      j["lifted"] = to_json(lift_eigenvector(data, *opts.lambda, v));
      j["verified"] = true;
      break;
    }
    case LiftAction::Zariski: {
      if (!opts.class_d) throw ConfigError("zariski requires --class");
      const Vector n = opts.n_sigma ? *opts.n_sigma : Vector(data.base_dim() + data.exceptional_dim());
      const ZariskiTransform t = transform_zariski(data, n, *opts.class_d);
      j["action"] = "zariski";
      j["class"] = to_json(*opts.class_d);
      j["k_d"] = to_json(data.k_op * *opts.class_d);
      j["n_sigma"] = to_json(n);
      j["negative"] = to_json(t.negative);
      j["positive"] = to_json(t.positive);
      j["reconstructs"] = true;
      break;
    }
    case LiftAction::Dominant: {
      j["action"] = "dominant";
      if (opts.float_mode) {
        const DominantApprox r = dominant_p_sigma_float(data);
        j["mode"] = "float";
        j["approx"] = true;
        j["lambda"] = r.lambda;
        j["d_phi"] = doubles(r.d_phi);
        j["d_psi"] = doubles(r.d_psi);
        j["residual"] = r.residual;
        j["power_iteration"] = {{"limit", doubles(r.power_limit)},
                                {"iterations", r.iterations},
                                {"converged", r.converged}};
        j["max_deviation"] = r.max_deviation;
        j["agree"] = r.converged && r.residual < kFloatResidualTolerance && r.max_deviation < kFloatAgreementTolerance;
      } else {
        const DominantExact r = dominant_p_sigma(data);
        j["mode"] = "exact";
        j["lambda"] = to_json(r.lambda);
        j["d_phi"] = to_json(r.d_phi);
        j["d_phi_inverse"] = r.d_phi_inverse ? to_json(*r.d_phi_inverse) : Json(nullptr);
        j["d_psi"] = to_json(r.d_psi);
        j["power_iteration"] = {{"limit", to_json(r.power_limit)},
                                {"iterations", r.iterations},
                                {"converged", r.converged}};
        j["agree"] = r.agree;
      }
      break;
    }
  }
  out << dump(j);
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor-class dynamics under flops and pseudoautomorphisms", "flopdyn"};
  app.require_subcommand(1);

  std::string config;
  std::size_t n_max = 3;
  std::size_t depth = 4;
  std::string format = "csv";
  std::optional<std::string> curve;
  std::optional<std::string> svg;
  bool check_closed_form = false;
  bool float_mode = false;
  std::string action;
  std::optional<std::string> lambda, vector, class_d, n_sigma;

  auto* table = app.add_subcommand("table", "Iterate the class action from the seed class");
  table->add_option("--config", config, "Family description file")->required();
  table->add_option("--n-max", n_max, "Last iterate to print");
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--check-closed-form", check_closed_form, "Compare every row with the I2 closed form");

  auto* sigma = app.add_subcommand("sigma", "Asymptotic multiplicity bounds along the boundary class");
  sigma->add_option("--config", config, "Family description file")->required();
  sigma->add_option("--n-max", n_max, "Number of orbit steps");
  sigma->add_option("--curve", curve, "Curve name (default: all curves)");

  auto* chambers = app.add_subcommand("chambers", "Orbit of the nef cone");
  chambers->add_option("--config", config, "Family description file")->required();
  chambers->add_option("--depth", depth, "Number of chambers past the nef cone");
  chambers->add_option("--svg", svg, "Write an SVG rendering to this path");

  auto* lift = app.add_subcommand("lift", "Small-lift block computations");
  lift->add_option("action", action, "assemble, eigen, zariski or dominant")
      ->required()
      ->check(CLI::IsMember({"assemble", "eigen", "zariski", "dominant"}));
  lift->add_option("--config", config, "Small-lift description file")->required();
  lift->add_option("--lambda", lambda, "Eigenvalue for 'eigen'");
  lift->add_option("--vector", vector, "Eigenvector of phi for 'eigen', comma separated");
  lift->add_option("--class", class_d, "Class D on X for 'zariski', comma separated");
  lift->add_option("--n-sigma", n_sigma, "N_sigma(f^* D) on Y for 'zariski', comma separated");
  lift->add_flag("--float", float_mode, "Double precision for irrational dominant eigenvalues");

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("flopdyn");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (table->parsed()) {
      return cmd_table(load_family(config), n_max, format == "json" ? TableFormat::Json : TableFormat::Csv,
                       check_closed_form, out, err);
    }
    if (sigma->parsed()) return cmd_sigma(load_family(config), curve, n_max, out, err);
    if (chambers->parsed()) return cmd_chambers(load_family(config), depth, svg, out, err);

    LiftOptions opts;
    if (lambda) opts.lambda = Rational::parse(*lambda);
    if (vector) opts.vector = parse_vector_arg(*vector);
    if (class_d) opts.class_d = parse_vector_arg(*class_d);
    if (n_sigma) opts.n_sigma = parse_vector_arg(*n_sigma);
    opts.float_mode = float_mode;
    const LiftAction act = action == "assemble" ? LiftAction::Assemble
                           : action == "eigen"  ? LiftAction::Eigen
                           : action == "zariski" ? LiftAction::Zariski
                                                 : LiftAction::Dominant;
    return cmd_lift(load_lift(config), act, opts, out, err);
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    if (dynamic_cast<const IrrationalSpectrumError*>(&e)) err << "hint: rerun with --float\n";
    return is_input_error(e) ? kExitInputError : kExitHypothesisViolation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ConfigError: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace flopdyn
