#include "casimir4d/validation.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "casimir4d/analysis.hpp"
#include "casimir4d/asymptotics.hpp"
#include "casimir4d/geometry.hpp"
#include "casimir4d/gradient.hpp"
#include "casimir4d/proximity.hpp"
#include "casimir4d/report.hpp"
#include "casimir4d/spectrum.hpp"

namespace casimir4d {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr double kPi2 = kPi * kPi;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Resummed form of the conductor series: expanding ln(1 - y) = -sum_k y^k / k
// and summing over n first gives
//   F = -sum_{k>=1} (1/k) sum_{n>=2} (n^2 - 1) y_k^n,  y_k = rho^{2k},
// with sum_{n>=2} (n^2 - 1) y^n = y^2 (3 - y) / (1 - y)^3.
double em_energy_k_sum(double rho) {
  double sum = 0.0;
  double compensation = 0.0;
  for (int k = 1; k < 100000; ++k) {
    const double y = std::pow(rho, 2.0 * k);
    const double one_minus = 1.0 - y;
    const double term = -(y * y * (3.0 - y) / (one_minus * one_minus * one_minus)) / k;
    const double t = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return sum + compensation;
}

CriterionResult oracle_equivalence() {
  CriterionResult c{1, "oracle equivalence (scattering log-det vs exact series)", true, json::object(), 0.0};
  const auto start = Clock::now();
  json points = json::array();
  for (double rho : {0.1, 0.5, 0.9}) {
    const auto pair = ConcentricPair::from_rho(rho);
    const EnergyValue exact = em_energy_exact(pair, 1e-15);
    const EnergyValue logdet = scattering_logdet_energy(pair, exact.n_max);
    const double delta = std::abs(exact.value - logdet.value);
    const double allowed = 1e-12 + exact.tail_bound + logdet.tail_bound;
    c.passed = c.passed && delta <= allowed;
    points.push_back({{"rho", rho}, {"n_max", exact.n_max}, {"delta", delta}, {"allowed", allowed}});
  }
  const double elapsed = seconds_since(start);
  c.passed = c.passed && elapsed < 1.0;
  c.measured = {{"points", points}, {"runtime_s", elapsed}, {"runtime_limit_s", 1.0}};
  return c;
}

CriterionResult exact_regression() {
  CriterionResult c{2, "exact value regression at rho = 0.5", false, json::object(), 0.0};
  const double n_sum = em_energy_exact(ConcentricPair::from_rho(0.5)).value;
  const double k_sum = em_energy_k_sum(0.5);
  const double order_gap = std::abs(n_sum - k_sum);
  const double deviation = std::abs(n_sum - (-0.414637));
  c.passed = order_gap <= 1e-10 && deviation <= 1e-5;
  c.measured = {{"n_sum", n_sum},          {"k_sum", k_sum},
                {"order_gap", order_gap},  {"order_gap_limit", 1e-10},
                {"reference", -0.414637},  {"deviation", deviation},
                {"deviation_limit", 1e-5}};
  return c;
}

CriterionResult sphere_plate_error(int id, bool derivative_expansion) {
  const double x = 0.002;
  const double target = derivative_expansion ? -0.20 : 0.97;
  const double band = derivative_expansion ? 0.05 : 0.02;
  CriterionResult c{id, derivative_expansion ? "DE error at x = 0.002" : "PFA error at x = 0.002", false,
                    json::object(), 0.0};
  const EnergyValue exact =
      em_energy_exact(ConcentricPair::from_mu(mu_of_sphere_plate(x)));
  const EnergyValue approx = derivative_expansion ? de2_energy(x, TheoryKind::ElectromagneticConductor)
                                                  : pfa_leading(x, TheoryKind::ElectromagneticConductor);
  const double err = percent_error(exact, approx);
  c.passed = std::abs(err - target) <= band;
  c.measured = {{"x", x}, {"percent_error", err}, {"target", target}, {"band", band}};
  return c;
}

CriterionResult kernel_matching() {
  CriterionResult c{5, "kernel matching of beta", false, json::object(), 0.0};
  const double beta_em = second_order_match(TheoryKind::ElectromagneticConductor, 1.0).beta;
  const double beta_d = second_order_match(TheoryKind::DirichletScalar, 1.0).beta;
  const double beta_n = second_order_match(TheoryKind::NeumannScalar, 1.0).beta;
  const double d_em = std::abs(beta_em - (2.0 / 3.0) * (1.0 - 15.0 / kPi2));
  const double d_d = std::abs(beta_d - 2.0 / 3.0);
  const double d_n = std::abs(beta_n - (2.0 / 3.0 - 20.0 / kPi2));
  const double d_ntlo = std::abs(6.0 * beta_d - 3.75 - 0.25);
  c.passed = d_em <= 1e-12 && d_d <= 1e-12 && d_n <= 1e-12 && d_ntlo <= 1e-12;
  c.measured = {{"beta_em", beta_em}, {"beta_dirichlet", beta_d}, {"beta_neumann", beta_n},
                {"dev_em", d_em},     {"dev_dirichlet", d_d},     {"dev_neumann", d_n},
                {"dirichlet_ntlo", 6.0 * beta_d - 3.75},          {"tolerance", 1e-12}};
  return c;
}

CriterionResult plane_plane_consistency() {
  CriterionResult c{6, "plane-plane consistency F''_pp = 2 gamma", true, json::object(), 0.0};
  json points = json::array();
  for (auto theory : {TheoryKind::ElectromagneticConductor, TheoryKind::DirichletScalar}) {
    for (double d : {1.0, 2.0}) {
      const auto check = pp_consistency_check(theory, d);
      c.passed = c.passed && check.residual <= 1e-14;
      points.push_back({{"theory", to_string(theory)}, {"d", d}, {"residual", check.residual}});
    }
  }
  c.measured = {{"points", points}, {"tolerance", 1e-14}};
  return c;
}

CriterionResult ntlo_extraction() {
  CriterionResult c{7, "NTLO coefficient extraction", false, json::object(), 0.0};
  const auto fit = extract_em_ntlo(1e-5, 1e-3, 60);
  const double expected = 0.25 - 60.0 / kPi2;
  const double rel = std::abs(fit.c1 / expected - 1.0);
  c.passed = rel <= 1e-3;
  c.measured = {{"c1_fitted", fit.c1},
                {"c1_expected", expected},
                {"relative_error", rel},
                {"tolerance", 1e-3},
                {"leading_fitted", fit.leading},
                {"condition_estimate", fit.report.condition_estimate}};
  return c;
}

CriterionResult log_nntlo() {
  CriterionResult c{8, "logarithmic NNTLO and sign resolution", false, json::object(), 0.0};
  const LogFit fit = fit_log_nntlo(1e-6, 1e-3, 60);
  const double log_scale = std::log(2.0 / kPi2);
  const double const_term = kZeta3 / (4.0 * kPi2);
  // Intercepts implied by each variant once the logarithm is written as a ln x + b.
  const double b_printed = 0.25 * log_scale + const_term;
  const double b_resolved = -0.25 * log_scale - const_term;
  const bool slope_ok = std::abs(std::abs(fit.slope) - 0.25) <= 0.0025;
  const ExpansionVariant chosen = fit.slope < 0.0 ? ExpansionVariant::Fitted : ExpansionVariant::Printed;

  const auto mu_grid = log_grid(0.02, 0.3, 29);
  const auto worst_ratio = [&](const ExpansionCoefficients& coeffs) {
    double worst = 0.0;
    for (double mu : mu_grid) {
      const double exact = em_energy_exact(ConcentricPair::from_mu(mu), kFitSeriesTolerance).value;
      const double delta = std::abs(em_asymptotic_mu(mu, coeffs).value - exact);
      worst = std::max(worst, delta / (mu * mu * mu));
    }
    return worst;
  };
  const double preset_ratio = worst_ratio(em_mu_preset(chosen));
  const ExpansionCoefficients data_fit = fit_mu_expansion(0.02, 0.3, 60);
  const double data_fit_ratio = worst_ratio(data_fit);
  const double printed_ratio = worst_ratio(em_mu_printed());

  c.passed = slope_ok && preset_ratio <= 0.05 && data_fit_ratio <= 0.05;
  c.measured = {{"slope", fit.slope},
                {"intercept", fit.intercept},
                {"fit_residual", fit.residual},
                {"abs_slope_target", 0.25},
                {"abs_slope_band", 0.0025},
                {"printed", {{"slope", 0.25}, {"intercept", b_printed}}},
                {"sign_resolved", {{"slope", -0.25}, {"intercept", b_resolved}}},
                {"constant_recovered", fit.intercept + 0.25 * log_scale},
                {"selected_variant", chosen == ExpansionVariant::Fitted ? "fitted" : "printed"},
                {"selected_max_delta_over_mu3", preset_ratio},
                {"data_fit_max_delta_over_mu3", data_fit_ratio},
                {"printed_max_delta_over_mu3", printed_ratio},
                {"delta_over_mu3_limit", 0.05},
                {"data_fit_coefficients", data_fit}};
  return c;
}

CriterionResult dirichlet_nntlo() {
  CriterionResult c{9, "Dirichlet NNTLO coefficient and absence of ln x", false, json::object(), 0.0};
  const auto fit = extract_dirichlet_nntlo(1e-4, 1e-2, 60);
  const double expected = 12.0 / (kPi2 * kPi2) - 7.0 / 480.0;
  const double rel = std::abs(fit.c2 / expected - 1.0);
  c.passed = rel <= 0.01 && std::abs(fit.log_coefficient) < 1e-3;
  c.measured = {{"c2_fitted", fit.c2},
                {"c2_expected", expected},
                {"relative_error", rel},
                {"tolerance", 0.01},
                {"log_coefficient", fit.log_coefficient},
                {"log_coefficient_limit", 1e-3}};
  return c;
}

CriterionResult pfa_quadrature_check() {
  CriterionResult c{10, "parabolic PFA quadrature vs closed form", true, json::object(), 0.0};
  json points = json::array();
  for (double x : {0.001, 0.01, 0.1, 1.0}) {
    const HeightProfile profile{ProfileKind::Parabolic, 1.0};
    const double quad = pfa_quadrature(profile, x, TheoryKind::ElectromagneticConductor).value;
    const double closed = pfa_leading(x, TheoryKind::ElectromagneticConductor).value;
    const double rel = std::abs(quad / closed - 1.0);
    c.passed = c.passed && rel <= 1e-8;
    points.push_back({{"x", x}, {"relative_error", rel}});
  }
  c.measured = {{"points", points}, {"tolerance", 1e-8}};
  return c;
}

CriterionResult figure_reproduction(std::string& csv_out) {
  CriterionResult c{11, "figure reproduction (ratio -> 1, DE beats PFA for x <= 0.01)", true, json::object(), 0.0};
  const auto grid = default_figure_grid();
  const auto rows = sweep(TheoryKind::ElectromagneticConductor, grid);
  const auto figures = figure_data(rows);
  csv_out = figure1_csv(figures.fig1) + figure2_csv(figures.fig2);

  // Rows are in ascending x; below 1e-2 the ratio must approach 1 monotonically
  // as x decreases.
  bool monotone = true;
  double previous_gap = -1.0;
  int de_wins = 0;
  int compared = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].x > 0.01 * (1.0 + 1e-12)) continue;
    const double gap = std::abs(figures.fig1[i].ratio - 1.0);
    if (previous_gap >= 0.0 && !(gap > previous_gap)) monotone = false;
    previous_gap = gap;
    ++compared;
    if (std::abs(rows[i].err_de_pct) < std::abs(rows[i].err_pfa_pct)) ++de_wins;
  }
  const double smallest_gap = std::abs(figures.fig1.front().ratio - 1.0);
  c.passed = monotone && compared > 0 && de_wins == compared && smallest_gap < 0.01;
  c.measured = {{"points", rows.size()},
                {"points_with_x_le_0.01", compared},
                {"de_better_count", de_wins},
                {"ratio_monotone_toward_1", monotone},
                {"ratio_at_smallest_x", figures.fig1.front().ratio},
                {"x_min", rows.front().x}};
  return c;
}

CriterionResult runtime_and_determinism(Clock::time_point suite_start, const std::string& first_csv) {
  CriterionResult c{12, "suite runtime and deterministic output", false, json::object(), 0.0};
  const auto rows = sweep(TheoryKind::ElectromagneticConductor, default_figure_grid());
  const auto figures = figure_data(rows);
  const std::string again = figure1_csv(figures.fig1) + figure2_csv(figures.fig2);
  const bool identical = !first_csv.empty() && again == first_csv;
  const double elapsed = seconds_since(suite_start);
  c.passed = identical && elapsed < 60.0;
  c.measured = {{"byte_identical", identical}, {"wall_time_s", elapsed}, {"limit_s", 60.0}};
  return c;
}

CriterionResult guarded(int id, const std::string& name, const std::function<CriterionResult()>& check) {
  const auto start = Clock::now();
  CriterionResult result;
  try {
    result = check();
  } catch (const std::exception& e) {
    result = CriterionResult{id, name, false, {{"error", e.what()}}, 0.0};
  }
  result.seconds = seconds_since(start);
  return result;
}

}  // namespace

bool ValidationReport::all_passed() const {
  for (const auto& c : criteria) {
    if (!c.passed) return false;
  }
  return !criteria.empty();
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& c : criteria) {
    out += (c.passed ? "PASS" : "FAIL");
    out += "  [" + std::to_string(c.id) + "] " + c.name + "  " + c.measured.dump() + "\n";
  }
  return out;
}

ValidationReport run_validation() {
  const auto start = Clock::now();
  ValidationReport report;
  std::string figure_csv;
  report.criteria.push_back(guarded(1, "oracle equivalence", oracle_equivalence));
  report.criteria.push_back(guarded(2, "exact value regression", exact_regression));
  report.criteria.push_back(guarded(3, "PFA error", [] { return sphere_plate_error(3, false); }));
  report.criteria.push_back(guarded(4, "DE error", [] { return sphere_plate_error(4, true); }));
  report.criteria.push_back(guarded(5, "kernel matching", kernel_matching));
  report.criteria.push_back(guarded(6, "plane-plane consistency", plane_plane_consistency));
  report.criteria.push_back(guarded(7, "NTLO extraction", ntlo_extraction));
  report.criteria.push_back(guarded(8, "logarithmic NNTLO", log_nntlo));
  report.criteria.push_back(guarded(9, "Dirichlet NNTLO", dirichlet_nntlo));
  report.criteria.push_back(guarded(10, "PFA quadrature", pfa_quadrature_check));
  report.criteria.push_back(
      guarded(11, "figure reproduction", [&figure_csv] { return figure_reproduction(figure_csv); }));
  report.criteria.push_back(guarded(12, "runtime and determinism",
                                    [&] { return runtime_and_determinism(start, figure_csv); }));
  report.wall_seconds = seconds_since(start);
  return report;
}

void to_json(nlohmann::json& j, const CriterionResult& c) {
  j = {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"measured", c.measured}, {"seconds", c.seconds}};
}

void to_json(nlohmann::json& j, const ValidationReport& r) {
  j = {{"criteria", r.criteria}, {"wall_seconds", r.wall_seconds}, {"all_passed", r.all_passed()}};
}

}  // namespace casimir4d
