// Command-line front end: energies, sweeps, figure data, beta tables, fits
// and the validation suite.
//
// Exit codes: 0 ok, 1 validation failure, 2 invalid input, 3 convergence failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir4d/analysis.hpp"
#include "casimir4d/asymptotics.hpp"
#include "casimir4d/geometry.hpp"
#include "casimir4d/gradient.hpp"
#include "casimir4d/proximity.hpp"
#include "casimir4d/report.hpp"
#include "casimir4d/spectrum.hpp"
#include "casimir4d/validation.hpp"

namespace {

using namespace casimir4d;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitConvergence = 3;

struct RunConfig {
  std::string theory = "em";
  std::optional<double> rho;
  std::optional<double> x;
  std::optional<double> r1;
  std::optional<double> r2;
  std::optional<double> d;
  std::optional<double> xmin;
  std::optional<double> xmax;
  std::optional<int> points;
  std::optional<int> nmax;
  double tol = kDefaultTolerance;
  std::string out;
  std::string format = "csv";
  std::string variant = "fitted";
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + cfg.out + "'");
  file << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path.string() + "'");
  file << text;
}

std::string csv_record(const std::vector<std::pair<std::string, double>>& fields) {
  std::string header;
  std::string values;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) header += ',', values += ',';
    header += fields[i].first;
    values += format_double(fields[i].second);
  }
  return header + '\n' + values + '\n';
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw DomainError("format '" + cfg.format + "' is not supported by this command");
}

ExpansionVariant parse_variant(const std::string& name) {
  if (name == "printed") return ExpansionVariant::Printed;
  if (name == "fitted") return ExpansionVariant::Fitted;
  throw DomainError("unknown variant '" + name + "' (expected printed or fitted)");
}

std::vector<double> sweep_grid(const RunConfig& cfg) {
  const double lo = cfg.xmin.value_or(1e-4);
  const double hi = cfg.xmax.value_or(1e-1);
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("empty x range: need 0 < xmin < xmax");
  if (cfg.points) {
    if (*cfg.points < 2) throw DomainError("--points must be at least 2");
    return log_grid(lo, hi, *cfg.points);
  }
  return log_grid_per_decade(lo, hi, 40);
}

int run_energy(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const TheoryKind theory = theory_from_string(cfg.theory);
  const bool has_sphere_pair = cfg.r1 || cfg.r2 || cfg.d;
  const int groups = static_cast<int>(cfg.rho.has_value()) + static_cast<int>(cfg.x.has_value()) +
                     static_cast<int>(has_sphere_pair);
  if (groups != 1) throw DomainError("energy needs exactly one of --rho, --x, or --r1 --r2 --d");
  if (has_sphere_pair && !(cfg.r1 && cfg.r2 && cfg.d)) throw DomainError("--r1, --r2 and --d go together");

  double x = 0.0;
  std::optional<ConcentricPair> pair;
  if (cfg.rho) {
    pair = ConcentricPair::from_rho(*cfg.rho);
    x = sphere_plate_x_of_mu(pair->mu());
  } else if (cfg.x) {
    pair = ConcentricPair::from_mu(mu_of_sphere_plate(*cfg.x));
    x = *cfg.x;
  } else {
    const SphereSphereGeometry geom(*cfg.r1, *cfg.r2, *cfg.d);
    pair = concentric_of_geometry(geom);
    // Sphere-plate system with the same mu; kappa - 1.
    x = sphere_plate_x_of_mu(pair->mu());
  }

  const EnergyValue exact = cfg.nmax ? exact_energy_truncated(theory, *pair, *cfg.nmax)
                                     : exact_energy(theory, *pair, cfg.tol);
  const EnergyValue pfa = pfa_leading(x, theory);
  const EnergyValue de2 = de2_energy(x, theory);
  const EnergyValue asym = theory == TheoryKind::ElectromagneticConductor
                               ? em_asymptotic_mu(pair->mu(), em_mu_preset(parse_variant(cfg.variant)))
                               : dirichlet_sphere_plate_expansion(x, dirichlet_sphere_plate_printed());

  const std::vector<std::pair<std::string, double>> fields{
      {"rho", pair->rho()},
      {"mu", pair->mu()},
      {"x", x},
      {"F_exact", exact.value},
      {"F_pfa", pfa.value},
      {"F_de2", de2.value},
      {"F_asym", asym.value},
      {"err_pfa_pct", percent_error(exact, pfa)},
      {"err_de_pct", percent_error(exact, de2)},
      {"n_max", static_cast<double>(exact.n_max)},
      {"tail_bound", exact.tail_bound},
  };
  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    j["n_max"] = exact.n_max;
    j["theory"] = to_string(theory);
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, csv_record(fields));
  }
  return kExitOk;
}

int run_sweep(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const auto rows = sweep(theory_from_string(cfg.theory), sweep_grid(cfg), cfg.tol);
  emit(cfg, cfg.format == "json" ? json(rows).dump(2) + "\n" : sweep_csv(rows));
  return kExitOk;
}

int run_figure(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json", "svg"});
  const auto rows = sweep(theory_from_string(cfg.theory), sweep_grid(cfg), cfg.tol);
  const auto data = figure_data(rows);
  const std::string fig1 = figure1_csv(data.fig1);
  const std::string fig2 = figure2_csv(data.fig2);

  if (cfg.out.empty()) {
    if (cfg.format == "svg") throw DomainError("svg figures need --out <directory>");
    if (cfg.format == "json") {
      std::cout << json{{"fig1", data.fig1}, {"fig2", data.fig2}}.dump(2) << "\n";
    } else {
      std::cout << fig1 << "\n" << fig2;
    }
    return kExitOk;
  }

  const std::filesystem::path dir(cfg.out);
  std::filesystem::create_directories(dir);
  if (cfg.format == "json") {
    write_file(dir / "fig1.json", json(data.fig1).dump(2) + "\n");
    write_file(dir / "fig2.json", json(data.fig2).dump(2) + "\n");
    return kExitOk;
  }
  write_file(dir / "fig1.csv", fig1);
  write_file(dir / "fig2.csv", fig2);
  if (cfg.format == "svg") {
    LinePlot p1{"Sphere-plate energy normalized by the PFA", "x = d/R", "F / F_PFA", true, {}};
    PlotSeries ratio{"exact / PFA", {}, {}, false};
    for (const auto& r : data.fig1) ratio.x.push_back(r.x), ratio.y.push_back(r.ratio);
    p1.series.push_back(ratio);
    write_file(dir / "fig1.svg", render_svg(p1));

    LinePlot p2{"Percent error of PFA and DE", "-log10(d/R)", "percent error", false, {}};
    PlotSeries pfa{"PFA", {}, {}, false};
    PlotSeries de{"DE", {}, {}, true};
    for (const auto& r : data.fig2) {
      pfa.x.push_back(r.log10inv_x), pfa.y.push_back(r.err_pfa_pct);
      de.x.push_back(r.log10inv_x), de.y.push_back(r.err_de_pct);
    }
    p2.series = {pfa, de};
    write_file(dir / "fig2.svg", render_svg(p2));
  }
  return kExitOk;
}

int run_kernel(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const double d = cfg.d.value_or(1.0);
  if (cfg.format == "json") {
    json table = json::object();
    for (auto theory : {TheoryKind::ElectromagneticConductor, TheoryKind::DirichletScalar, TheoryKind::NeumannScalar}) {
      table[std::string(to_string(theory))] = second_order_match(theory, d);
    }
    emit(cfg, json{{"d", d}, {"beta_table", table}}.dump(2) + "\n");
    return kExitOk;
  }
  std::string out = "theory,d,gamma,delta,beta,cubic_present\n";
  for (auto theory : {TheoryKind::ElectromagneticConductor, TheoryKind::DirichletScalar, TheoryKind::NeumannScalar}) {
    const auto m = second_order_match(theory, d);
    out += std::string(to_string(theory)) + ',' + format_double(d) + ',' + format_double(m.gamma) + ',' +
           format_double(m.delta) + ',' + format_double(m.beta) + ',' + (m.cubic_present ? "true" : "false") + '\n';
  }
  emit(cfg, out);
  return kExitOk;
}

int run_fit(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const auto ntlo = extract_em_ntlo();
  const auto dirichlet = extract_dirichlet_nntlo();
  const LogFit log_fit = fit_log_nntlo(1e-6, 1e-3);
  const auto mu_fit = fit_mu_expansion();
  if (cfg.format == "json") {
    json j = {{"em_ntlo", {{"leading", ntlo.leading}, {"c1", ntlo.c1}, {"report", ntlo.report}}},
              {"dirichlet_nntlo",
               {{"c2", dirichlet.c2}, {"log_coefficient", dirichlet.log_coefficient}, {"report", dirichlet.report}}},
              {"em_log_nntlo", {{"slope", log_fit.slope}, {"intercept", log_fit.intercept}, {"residual", log_fit.residual}}},
              {"em_mu_fit", mu_fit},
              {"em_mu_printed", em_mu_printed()},
              {"em_mu_resolved", em_mu_resolved()}};
    emit(cfg, j.dump(2) + "\n");
    return kExitOk;
  }
  std::string out = "quantity,value\n";
  const auto row = [&out](const std::string& k, double v) { out += k + ',' + format_double(v) + '\n'; };
  row("em_leading", ntlo.leading);
  row("em_c1", ntlo.c1);
  row("em_ntlo_condition", ntlo.report.condition_estimate);
  row("dirichlet_c2", dirichlet.c2);
  row("dirichlet_log_coefficient", dirichlet.log_coefficient);
  row("em_log_slope", log_fit.slope);
  row("em_log_intercept", log_fit.intercept);
  row("em_mu_inverse_cubic", mu_fit.powers.at(-3.0));
  row("em_mu_inverse", mu_fit.powers.at(-1.0));
  row("em_mu_log", mu_fit.log_coefficient);
  row("em_mu_constant", mu_fit.constant);
  row("em_mu_linear", mu_fit.powers.at(1.0));
  emit(cfg, out);
  return kExitOk;
}

int run_validate(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  const auto report = run_validation();
  if (cfg.format == "json") {
    emit(cfg, json(report).dump(2) + "\n");
  } else {
    std::string out = "id,name,passed,seconds,measured\n";
    for (const auto& c : report.criteria) {
      std::string measured = c.measured.dump();
      std::string quoted = "\"";
      for (char ch : measured) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      quoted += '"';
      out += std::to_string(c.id) + ",\"" + c.name + "\"," + (c.passed ? "true" : "false") + ',' +
             format_double(c.seconds) + ',' + quoted + '\n';
    }
    emit(cfg, out);
  }
  std::cerr << report.summary();
  return report.all_passed() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical Casimir interaction of three-spheres in four euclidean dimensions"};
  app.set_config("--config", "", "key=value file with default option values (flags override it)");
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--theory", cfg.theory, "em, dirichlet or neumann")->capture_default_str();
  app.add_option("--rho", cfg.rho, "concentric radii ratio R-/R+");
  app.add_option("--x", cfg.x, "sphere-plate ratio d/R");
  app.add_option("--r1", cfg.r1, "radius of sphere 1");
  app.add_option("--r2", cfg.r2, "radius of sphere 2");
  app.add_option("--d", cfg.d, "minimum surface separation (kernel: plate distance)");
  app.add_option("--xmin", cfg.xmin, "smallest x of a sweep (default 1e-4)");
  app.add_option("--xmax", cfg.xmax, "largest x of a sweep (default 1e-1)");
  app.add_option("--points", cfg.points, "number of log-spaced x values (default 40 per decade)");
  app.add_option("--nmax", cfg.nmax, "sum the exact series through this index instead of using --tol");
  app.add_option("--tol", cfg.tol, "relative tolerance of the exact series")->capture_default_str();
  app.add_option("--out", cfg.out, "output file (figure: output directory)");
  app.add_option("--format", cfg.format, "csv, json or svg")->capture_default_str();
  app.add_option("--variant", cfg.variant, "asymptotic coefficients: printed or fitted")->capture_default_str();

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"energy", "exact energy and approximations at one configuration", run_energy},
      {"sweep", "sphere-plate comparison table over log-spaced x", run_sweep},
      {"figure", "data for the PFA ratio and percent-error figures", run_figure},
      {"kernel", "beta coefficients from the perturbative kernels", run_kernel},
      {"fit", "expansion coefficients fitted to the exact series", run_fit},
      {"validate", "run the acceptance suite", run_validate},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    for (const auto& c : commands) {
      if (app.got_subcommand(c.name)) return c.run(cfg);
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const IllConditionedFit& e) {
    std::cerr << "fit failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
