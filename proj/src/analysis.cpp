#include "casimir4d/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <thread>

#include <Eigen/Dense>

#include "casimir4d/geometry.hpp"
#include "casimir4d/gradient.hpp"
#include "casimir4d/proximity.hpp"

namespace casimir4d {
namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double exact_sphere_plate(TheoryKind theory, double x, double tol) {
  return exact_energy(theory, ConcentricPair::from_mu(mu_of_sphere_plate(x)), tol).value;
}

}  // namespace

double percent_error(const EnergyValue& exact, const EnergyValue& approx) {
  if (approx.value == 0.0 || !std::isfinite(approx.value)) {
    throw DomainError("percent_error: approximate value must be finite and non-zero");
  }
  return 100.0 * (exact.value - approx.value) / std::abs(approx.value);
}

BasisFunction BasisFunction::from_tag(const std::string& tag) {
  if (tag == "logx") return log_x();
  if (tag == "const") return constant();
  if (tag.size() > 5 && tag.rfind("pow(", 0) == 0 && tag.back() == ')') {
    const std::string inner = tag.substr(4, tag.size() - 5);
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(inner, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == inner.size() && used > 0) return power(p);
  }
  throw DomainError("unknown basis tag '" + tag + "' (expected pow(p), logx or const)");
}

double BasisFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::Power:
      return std::pow(x, exponent_);
    case Kind::LogX:
      return std::log(x);
    case Kind::Constant:
      return 1.0;
  }
  return 0.0;
}

std::string BasisFunction::tag() const {
  switch (kind_) {
    case Kind::Power: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "pow(%g)", exponent_);
      return buf;
    }
    case Kind::LogX:
      return "logx";
    case Kind::Constant:
      return "const";
  }
  return "";
}

double FitReport::coefficient(const BasisFunction& fn) const {
  const auto it = std::find(basis.begin(), basis.end(), fn);
  if (it == basis.end()) throw DomainError("basis function " + fn.tag() + " is not part of the fit");
  return coefficients[static_cast<std::size_t>(it - basis.begin())];
}

FitReport fit_samples(std::span<const BasisFunction> basis, std::span<const double> grid,
                      std::span<const double> values, double weight_power) {
  const auto m = static_cast<Eigen::Index>(grid.size());
  const auto k = static_cast<Eigen::Index>(basis.size());
  if (k == 0) throw DomainError("fit needs at least one basis function");
  if (values.size() != grid.size()) throw DomainError("fit: grid and values differ in length");
  if (m < 3 * k) {
    throw DomainError("fit needs at least 3 points per basis function (" + std::to_string(m) + " points for " +
                      std::to_string(k) + " functions)");
  }

  Eigen::MatrixXd design(m, k);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double x = grid[static_cast<std::size_t>(i)];
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("fit grid points must be finite and > 0");
    const double w = std::pow(x, weight_power);
    for (Eigen::Index j = 0; j < k; ++j) design(i, j) = w * basis[static_cast<std::size_t>(j)](x);
    rhs(i) = w * values[static_cast<std::size_t>(i)];
  }

  const Eigen::VectorXd column_norms = design.colwise().norm();
  if ((column_norms.array() == 0.0).any() || !column_norms.allFinite()) {
    throw IllConditionedFit("fit: a basis function vanishes or overflows on the grid",
                            std::numeric_limits<double>::infinity());
  }
  const Eigen::MatrixXd equilibrated = design * column_norms.cwiseInverse().asDiagonal();

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(equilibrated);
  const auto& sv = svd.singularValues();
  const double condition =
      sv(k - 1) > 0.0 ? sv(0) / sv(k - 1) : std::numeric_limits<double>::infinity();
  if (!(condition <= kMaxFitCondition)) {
    throw IllConditionedFit("fit: design matrix is rank deficient or ill-conditioned (condition " +
                                format_number(condition) + ")",
                            condition);
  }

  const Eigen::VectorXd scaled = equilibrated.householderQr().solve(rhs);
  const Eigen::VectorXd coefficients = scaled.cwiseQuotient(column_norms);

  FitReport report;
  report.basis.assign(basis.begin(), basis.end());
  report.coefficients.assign(coefficients.data(), coefficients.data() + k);
  report.grid.assign(grid.begin(), grid.end());
  report.condition_estimate = condition;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double model = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) model += report.coefficients[j] * basis[j](grid[i]);
    report.max_residual = std::max(report.max_residual, std::abs(values[i] - model));
  }
  return report;
}

FitReport fit_expansion(TheoryKind theory, std::span<const BasisFunction> basis, std::span<const double> grid,
                        std::span<const KnownTerm> known) {
  if (theory == TheoryKind::NeumannScalar) throw NoExactSolution(theory);
  for (double x : grid) {
    if (!(x > 0.0) || !(x <= 0.05)) throw DomainError("fit_expansion grid must lie in (0, 0.05]");
  }
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) {
    double y = exact_sphere_plate(theory, x, kFitSeriesTolerance);
    for (const auto& term : known) y -= term.coefficient * term.function(x);
    values.push_back(y);
  }
  return fit_samples(basis, grid, values, 1.5);
}

NtloExtraction extract_em_ntlo(double x_lo, double x_hi, int points) {
  const std::vector<BasisFunction> basis{BasisFunction::power(-1.5), BasisFunction::power(-0.5),
                                         BasisFunction::log_x(), BasisFunction::constant(),
                                         BasisFunction::power(0.5)};
  const auto grid = log_grid(x_lo, x_hi, points);
  NtloExtraction out;
  out.report = fit_expansion(TheoryKind::ElectromagneticConductor, basis, grid);
  out.leading = out.report.coefficients[0];
  out.c1 = out.report.coefficients[1] / out.leading;
  return out;
}

DirichletNntloExtraction extract_dirichlet_nntlo(double x_lo, double x_hi, int points) {
  const double leading = -0.5 * em_pfa_prefactor();
  const std::vector<KnownTerm> known{{BasisFunction::power(-1.5), leading},
                                     {BasisFunction::power(-0.5), 0.25 * leading}};
  const std::vector<BasisFunction> basis{BasisFunction::power(0.5), BasisFunction::constant(),
                                         BasisFunction::log_x(), BasisFunction::power(1.5)};
  const auto grid = log_grid(x_lo, x_hi, points);
  DirichletNntloExtraction out;
  out.report = fit_expansion(TheoryKind::DirichletScalar, basis, grid, known);
  out.c2 = out.report.coefficient(BasisFunction::power(0.5)) / leading;
  out.log_coefficient = out.report.coefficient(BasisFunction::log_x());
  return out;
}

LogFit fit_log_nntlo(double x_lo, double x_hi, int points) {
  constexpr double kSlack = 1e-12;
  if (!(x_lo >= 1e-6 * (1.0 - kSlack)) || !(x_hi <= 1e-3 * (1.0 + kSlack)) || !(x_lo < x_hi)) {
    throw DomainError("fit_log_nntlo range must satisfy 1e-6 <= x_lo < x_hi <= 1e-3");
  }
  const double a = em_pfa_prefactor();
  const double c1 = em_sphere_plate_printed().powers.at(1.0);
  const auto grid = log_grid(x_lo, x_hi, points);
  std::vector<double> residual_energy;
  residual_energy.reserve(grid.size());
  for (double x : grid) {
    const double f = exact_sphere_plate(TheoryKind::ElectromagneticConductor, x, kFitSeriesTolerance);
    residual_energy.push_back(-f - a / (x * std::sqrt(x)) * (1.0 + c1 * x));
  }
  const std::vector<BasisFunction> basis{BasisFunction::log_x(), BasisFunction::constant()};
  const auto report = fit_samples(basis, grid, residual_energy, 0.0);
  return LogFit{report.coefficients[0], report.coefficients[1], report.max_residual};
}

ExpansionCoefficients fit_mu_expansion(double mu_lo, double mu_hi, int points) {
  if (!(mu_lo > 0.0) || !(mu_lo < mu_hi)) throw DomainError("fit_mu_expansion needs 0 < mu_lo < mu_hi");
  const auto grid = log_grid(mu_lo, mu_hi, points);
  std::vector<double> minus_f;
  minus_f.reserve(grid.size());
  for (double mu : grid) minus_f.push_back(-em_energy_exact(ConcentricPair::from_mu(mu), kFitSeriesTolerance).value);

  const std::vector<BasisFunction> basis{BasisFunction::power(-3.0), BasisFunction::power(-1.0),
                                         BasisFunction::log_x(), BasisFunction::constant(),
                                         BasisFunction::power(1.0)};
  const auto report = fit_samples(basis, grid, minus_f, 3.0);

  ExpansionCoefficients c;
  c.form = ExpansionForm::Mu;
  c.variant = ExpansionVariant::Fitted;
  c.powers = {{-3.0, report.coefficients[0]}, {-1.0, report.coefficients[1]}, {1.0, report.coefficients[4]}};
  c.log_coefficient = report.coefficients[2];
  c.log_argument_scale = 1.0 / kPi;
  // C ln(mu) + D = C ln(mu/pi) + (D + C ln pi)
  c.constant = report.coefficients[3] + report.coefficients[2] * std::log(kPi);
  c.fit_residual = report.max_residual;
  return c;
}

std::vector<SweepRow> sweep(TheoryKind theory, std::span<const double> x_values, double tol) {
  if (theory == TheoryKind::NeumannScalar) throw NoExactSolution(theory);
  for (std::size_t i = 0; i < x_values.size(); ++i) {
    if (!(x_values[i] > 0.0) || !std::isfinite(x_values[i])) throw DomainError("sweep x values must be > 0");
    if (i > 0 && x_values[i] < x_values[i - 1]) throw DomainError("sweep x values must be sorted ascending");
  }

  const auto evaluate = [theory, tol](double x) {
    SweepRow row;
    row.x = x;
    const double mu = mu_of_sphere_plate(x);
    try {
      row.f_exact = exact_energy(theory, ConcentricPair::from_mu(mu), tol).value;
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("at x = " + format_number(x) + ": " + e.what());
    }
    const EnergyValue exact{row.f_exact, 0, 0.0};
    const EnergyValue pfa = pfa_leading(x, theory);
    const EnergyValue de2 = de2_energy(x, theory);
    row.f_pfa = pfa.value;
    row.f_de2 = de2.value;
    row.f_asym_fitted = theory == TheoryKind::ElectromagneticConductor
                            ? em_asymptotic_mu(mu, em_mu_resolved()).value
                            : dirichlet_sphere_plate_expansion(x, dirichlet_sphere_plate_printed()).value;
    row.err_pfa_pct = percent_error(exact, pfa);
    row.err_de_pct = percent_error(exact, de2);
    return row;
  };

  const std::size_t n = x_values.size();
  std::vector<SweepRow> rows(n);
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (n < 4 || workers == 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = evaluate(x_values[i]);
    return rows;
  }
  // Strided assignment keeps the cost of small-x points spread over workers.
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) rows[i] = evaluate(x_values[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return rows;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) throw DomainError("log_grid needs 0 < lo <= hi");
  if (count < 1) throw DomainError("log_grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> log_grid_per_decade(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("log_grid_per_decade needs 0 < lo < hi");
  if (points_per_decade < 1) throw DomainError("points_per_decade must be >= 1");
  const int intervals = std::max(1, static_cast<int>(std::lround(std::log10(hi / lo) * points_per_decade)));
  return log_grid(lo, hi, intervals + 1);
}

std::vector<double> default_figure_grid() { return log_grid_per_decade(1e-4, 1e-1, 40); }

FigureData figure_data(std::span<const SweepRow> rows) {
  FigureData data;
  for (const auto& row : rows) {
    data.fig1.push_back({row.x, row.f_exact / row.f_pfa});
    data.fig2.push_back({-std::log10(row.x), row.err_pfa_pct, row.err_de_pct});
  }
  return data;
}

}  // namespace casimir4d
