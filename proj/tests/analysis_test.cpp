#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "casimir4d/analysis.hpp"
#include "casimir4d/asymptotics.hpp"
#include "casimir4d/geometry.hpp"
#include "casimir4d/gradient.hpp"
#include "casimir4d/proximity.hpp"

using namespace casimir4d;

// Relative comparison (doctest adds an absolute floor of epsilon by default).
inline doctest::Approx Rel(double v) { return doctest::Approx(v).scale(0.0); }

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;
constexpr auto kEm = TheoryKind::ElectromagneticConductor;
constexpr auto kD = TheoryKind::DirichletScalar;

const double kLeading = -std::sqrt(2.0) * kPi4 / 1440.0;
const double kC1 = 0.25 - 60.0 / kPi2;

}  // namespace

TEST_CASE("percent error convention") {
  CHECK(percent_error({2.0}, {2.0}) == 0.0);
  CHECK(percent_error({-1.01}, {-1.0}) == Rel(-1.0));
  CHECK(percent_error({1.01}, {1.0}) == Rel(1.0));
  CHECK_THROWS_AS(percent_error({1.0}, {0.0}), DomainError);

  const double x = 0.002;
  const EnergyValue exact{em_energy_exact(ConcentricPair::from_mu(mu_of_sphere_plate(x))).value};
  CHECK(percent_error(exact, pfa_leading(x, kEm)) == Rel(0.97).epsilon(0.02));
  CHECK(percent_error(exact, de2_energy(x, kEm)) == Rel(-0.2).epsilon(0.1));
  CHECK(percent_error(exact, pfa_leading(x, kEm)) == Rel(0.98578724).epsilon(1e-7));
  CHECK(percent_error(exact, de2_energy(x, kEm)) == Rel(-0.18219105).epsilon(1e-6));
}

TEST_CASE("basis functions") {
  CHECK(BasisFunction::power(-1.5)(4.0) == Rel(0.125));
  CHECK(BasisFunction::log_x()(std::exp(2.0)) == Rel(2.0));
  CHECK(BasisFunction::constant()(123.0) == 1.0);
  for (const auto& f : {BasisFunction::power(-1.5), BasisFunction::power(0.5), BasisFunction::log_x(),
                        BasisFunction::constant()}) {
    CHECK(BasisFunction::from_tag(f.tag()) == f);
  }
  CHECK_THROWS_AS(BasisFunction::from_tag("exp"), DomainError);
}

TEST_CASE("synthetic data are recovered exactly") {
  const std::vector<BasisFunction> basis{BasisFunction::power(-1.5), BasisFunction::power(-0.5),
                                         BasisFunction::log_x(), BasisFunction::constant(),
                                         BasisFunction::power(0.5)};
  const std::vector<double> truth{-0.0956648, 0.5576, 0.25, -0.03, 1.7};
  const auto synthesize = [&](const std::vector<double>& grid) {
    std::vector<double> values;
    for (double x : grid) {
      double y = 0.0;
      for (std::size_t j = 0; j < basis.size(); ++j) y += truth[j] * basis[j](x);
      values.push_back(y);
    }
    return values;
  };

  // Every term contributes comparably on [1e-3, 1].
  const auto grid = log_grid(1e-3, 1.0, 60);
  const auto values = synthesize(grid);
  for (double weight : {0.0, 1.5}) {
    CAPTURE(weight);
    const auto report = fit_samples(basis, grid, values, weight);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      CAPTURE(j);
      CHECK(report.coefficients[j] == Rel(truth[j]).epsilon(1e-10));
    }
    CHECK(report.coefficient(BasisFunction::log_x()) == Rel(0.25).epsilon(1e-10));
    CHECK(report.condition_estimate < kMaxFitCondition);
  }

  // On an asymptotic grid the subleading terms carry little of the signal;
  // the fitted function and the dominant coefficients are still exact.
  const auto small = log_grid(1e-5, 1e-2, 60);
  const auto small_values = synthesize(small);
  const auto report = fit_samples(basis, small, small_values, 1.5);
  CHECK(report.coefficients[0] == Rel(truth[0]).epsilon(1e-10));
  CHECK(report.coefficients[1] == Rel(truth[1]).epsilon(1e-10));
  for (std::size_t i = 0; i < small.size(); ++i) {
    double model = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j) model += report.coefficients[j] * basis[j](small[i]);
    CHECK(model == Rel(small_values[i]).epsilon(1e-12));
  }
}

TEST_CASE("fit diagnostics") {
  const auto grid = log_grid(1e-4, 1e-2, 30);
  const std::vector<double> values(grid.size(), 1.0);
  const std::vector<BasisFunction> twice{BasisFunction::constant(), BasisFunction::constant()};
  CHECK_THROWS_AS(fit_samples(twice, grid, values, 0.0), IllConditionedFit);
  const std::vector<BasisFunction> one{BasisFunction::constant()};
  CHECK_THROWS_AS(fit_samples(one, std::span(grid).first(2), std::span(values).first(2), 0.0), DomainError);
  CHECK_THROWS_AS(fit_samples(one, grid, std::span(values).first(5), 0.0), DomainError);
  CHECK_THROWS_AS(fit_samples({}, grid, values, 0.0), DomainError);
  CHECK_THROWS_AS(fit_samples(one, grid, values, 0.0).coefficient(BasisFunction::log_x()), DomainError);
  const auto outside = log_grid(1e-3, 0.1, 30);
  CHECK_THROWS_AS(fit_expansion(kEm, one, outside), DomainError);
  CHECK_THROWS_AS(fit_expansion(TheoryKind::NeumannScalar, one, grid), NoExactSolution);
}

TEST_CASE("leading coefficient from the exact series") {
  const auto grid = log_grid(1e-5, 1e-4, 30);
  const std::vector<BasisFunction> two{BasisFunction::power(-1.5), BasisFunction::power(-0.5)};
  const auto fit = fit_expansion(kEm, two, grid);
  CHECK(fit.coefficient(BasisFunction::power(-1.5)) == Rel(kLeading).epsilon(1e-5));

  // A single power absorbs the omitted next-to-leading term: its bias is of
  // order |c1| x over the grid.
  const std::vector<BasisFunction> one{BasisFunction::power(-1.5)};
  const double single = fit_expansion(kEm, one, grid).coefficients[0];
  const double bias = std::abs(single / kLeading - 1.0);
  CHECK(bias > std::abs(kC1) * 1e-5);
  CHECK(bias < std::abs(kC1) * 1e-4);
}

TEST_CASE("next-to-leading coefficient") {
  const auto ntlo = extract_em_ntlo();
  CHECK(ntlo.leading == Rel(kLeading).epsilon(1e-6));
  CHECK(ntlo.c1 == Rel(kC1).epsilon(1e-3));
  CHECK(ntlo.c1 == Rel(-5.82927).epsilon(1e-3));
  CHECK(ntlo.report.condition_estimate < kMaxFitCondition);
}

TEST_CASE("Dirichlet next-to-next-to-leading coefficient") {
  const auto fit = extract_dirichlet_nntlo();
  CHECK(fit.c2 == Rel(12.0 / kPi4 - 7.0 / 480.0).epsilon(0.01));
  CHECK(fit.c2 == Rel(0.108609).epsilon(0.01));
  CHECK(std::abs(fit.log_coefficient) < 1e-3);
}

TEST_CASE("logarithmic next-to-next-to-leading term") {
  const auto fit = fit_log_nntlo(1e-6, 1e-3);
  CHECK(std::abs(fit.slope) == Rel(0.25).epsilon(0.01));
  CHECK(fit.slope < 0.0);
  // On the shortest range the intercept recovers the constant.
  const auto narrow = fit_log_nntlo(1e-6, 1e-5);
  const double constant = narrow.intercept + 0.25 * std::log(2.0 / kPi2);
  CHECK(constant == Rel(-kZeta3 / (4.0 * kPi2)).epsilon(0.05));
  CHECK_THROWS_AS(fit_log_nntlo(1e-7, 1e-3), DomainError);
  CHECK_THROWS_AS(fit_log_nntlo(1e-4, 1e-2), DomainError);
  CHECK_THROWS_AS(fit_log_nntlo(1e-4, 1e-5), DomainError);
}

TEST_CASE("mu-form fit pins the coefficients") {
  const auto c = fit_mu_expansion();
  CHECK(c.variant == ExpansionVariant::Fitted);
  CHECK(c.powers.at(-3.0) == Rel(kPi4 / 360.0).epsilon(1e-9));
  CHECK(c.powers.at(-1.0) == Rel(-kPi2 / 12.0).epsilon(1e-8));
  CHECK(c.log_coefficient == Rel(-0.5).epsilon(1e-8));
  CHECK(c.constant == Rel(-kZeta3 / (4.0 * kPi2)).epsilon(1e-6));
  CHECK(c.powers.at(1.0) == Rel(11.0 / 120.0).epsilon(1e-6));
  REQUIRE(c.fit_residual.has_value());
  for (double mu : {0.02, 0.1, 0.3}) {
    const double exact = em_energy_exact(ConcentricPair::from_mu(mu)).value;
    CHECK(std::abs(em_asymptotic_mu(mu, c).value - exact) <= 0.05 * mu * mu * mu);
  }
}

TEST_CASE("fit stability under grid refinement") {
  const auto base = extract_em_ntlo(1e-5, 1e-3, 60);
  for (int points : {30, 120}) {
    CAPTURE(points);
    const auto other = extract_em_ntlo(1e-5, 1e-3, points);
    const double allowed = 10.0 * std::max(base.report.max_residual, other.report.max_residual);
    for (std::size_t j = 0; j < base.report.coefficients.size(); ++j) {
      CAPTURE(j);
      CHECK(std::abs(base.report.coefficients[j] - other.report.coefficients[j]) <= allowed);
    }
  }
}

TEST_CASE("grids") {
  const auto g = log_grid(1e-4, 1e-1, 4);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == 1e-4);
  CHECK(g[1] == Rel(1e-3).epsilon(1e-14));
  CHECK(g[3] == 1e-1);
  CHECK(log_grid(0.5, 0.5, 1) == std::vector<double>{0.5});
  CHECK(default_figure_grid().size() == 121);
  CHECK(default_figure_grid().front() == 1e-4);
  CHECK(default_figure_grid().back() == 1e-1);
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(log_grid(1.0, 0.5, 5), DomainError);
  CHECK_THROWS_AS(log_grid_per_decade(1e-2, 1e-3, 10), DomainError);
}

TEST_CASE("sweep rows") {
  const std::vector<double> xs{0.002};
  const auto rows = sweep(kEm, xs);
  REQUIRE(rows.size() == 1);
  const auto& r = rows.front();
  CHECK(r.err_pfa_pct == Rel(0.97).epsilon(0.02));
  CHECK(r.err_de_pct == Rel(-0.2).epsilon(0.1));
  // Single-point sweep equals the individual calls.
  const double mu = mu_of_sphere_plate(0.002);
  CHECK(r.f_exact == em_energy_exact(ConcentricPair::from_mu(mu)).value);
  CHECK(r.f_pfa == pfa_leading(0.002, kEm).value);
  CHECK(r.f_de2 == de2_energy(0.002, kEm).value);
  CHECK(r.f_asym_fitted == em_asymptotic_mu(mu, em_mu_resolved()).value);
  CHECK(r.f_asym_fitted == Rel(r.f_exact).epsilon(1e-10));

  const auto d = sweep(kD, xs).front();
  CHECK(d.f_asym_fitted == dirichlet_sphere_plate_expansion(0.002, dirichlet_sphere_plate_printed()).value);

  CHECK_THROWS_AS(sweep(TheoryKind::NeumannScalar, xs), NoExactSolution);
  const std::vector<double> unsorted{0.01, 0.001};
  CHECK_THROWS_AS(sweep(kEm, unsorted), DomainError);
  const std::vector<double> negative{-0.01, 0.001};
  CHECK_THROWS_AS(sweep(kEm, negative), DomainError);
  CHECK(sweep(kEm, std::vector<double>{}).empty());
}

TEST_CASE("sweep is ordered and deterministic") {
  const auto grid = default_figure_grid();
  const auto first = sweep(kEm, grid);
  const auto second = sweep(kEm, grid);
  REQUIRE(first.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(first[i].x == grid[i]);
    CHECK(first[i].f_exact == second[i].f_exact);
    CHECK(first[i].err_de_pct == second[i].err_de_pct);
  }
}

TEST_CASE("derivative expansion beats the PFA at small separation") {
  for (auto theory : {kEm, kD}) {
    const auto rows = sweep(theory, log_grid_per_decade(1e-4, 1e-2, 20));
    for (const auto& r : rows) {
      CAPTURE(r.x);
      CHECK(std::abs(r.err_de_pct) < std::abs(r.err_pfa_pct));
    }
  }
}

TEST_CASE("figure data") {
  const auto rows = sweep(kEm, default_figure_grid());
  const auto data = figure_data(rows);
  REQUIRE(data.fig1.size() == rows.size());
  REQUIRE(data.fig2.size() == rows.size());
  CHECK(data.fig1.front().ratio == Rel(1.0).epsilon(1e-3));
  for (std::size_t i = 0; i + 1 < data.fig1.size(); ++i) {
    // Ratio moves monotonically toward 1 as x decreases.
    if (data.fig1[i + 1].x <= 1e-2) CHECK(std::abs(data.fig1[i].ratio - 1.0) < std::abs(data.fig1[i + 1].ratio - 1.0));
  }
  const auto at = figure_data(sweep(kEm, std::vector<double>{0.002}));
  CHECK(at.fig2.front().log10inv_x == Rel(2.69897).epsilon(1e-6));
  CHECK(at.fig2.front().err_pfa_pct == Rel(0.97).epsilon(0.02));
  CHECK(at.fig2.front().err_de_pct == Rel(-0.2).epsilon(0.1));
}
