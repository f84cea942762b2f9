#pragma once

#include <span>
#include <string>
#include <vector>

#include "casimir4d/asymptotics.hpp"
#include "casimir4d/core.hpp"
#include "casimir4d/spectrum.hpp"

namespace casimir4d {

/// 100 (exact - approx) / |approx|. Throws DomainError for approx == 0.
double percent_error(const EnergyValue& exact, const EnergyValue& approx);

/// One fit function: x^p, ln x, or 1.
class BasisFunction {
 public:
  enum class Kind { Power, LogX, Constant };

  static BasisFunction power(double exponent) { return BasisFunction(Kind::Power, exponent); }
  static BasisFunction log_x() { return BasisFunction(Kind::LogX, 0.0); }
  static BasisFunction constant() { return BasisFunction(Kind::Constant, 0.0); }
  /// Parses "pow(-1.5)", "logx" or "const".
  static BasisFunction from_tag(const std::string& tag);

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }
  double operator()(double x) const;
  /// "pow(p)", "logx" or "const".
  std::string tag() const;

  bool operator==(const BasisFunction&) const = default;

 private:
  BasisFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}
  Kind kind_;
  double exponent_;
};

/// A contribution with a fixed coefficient removed from the data before fitting.
struct KnownTerm {
  BasisFunction function;
  double coefficient;
};

struct FitReport {
  std::vector<BasisFunction> basis;
  std::vector<double> coefficients;
  /// max_i |y_i - model(x_i)| in the units of the fitted quantity.
  double max_residual = 0.0;
  std::vector<double> grid;
  /// 2-norm condition number of the column-equilibrated weighted design matrix.
  double condition_estimate = 0.0;

  /// Coefficient of `fn`; throws DomainError if it is not in the basis.
  double coefficient(const BasisFunction& fn) const;
};

/// Fits above this condition estimate are rejected with IllConditionedFit.
inline constexpr double kMaxFitCondition = 1e13;
/// Series tolerance used for fit data: the certified tail is below double resolution.
inline constexpr double kFitSeriesTolerance = 1e-16;

/// Weighted linear least squares of `values` against `basis`. Row i is scaled
/// by grid[i]^weight_power; columns are equilibrated and the system is solved
/// by Householder QR. Needs at least 3 points per basis function.
FitReport fit_samples(std::span<const BasisFunction> basis, std::span<const double> grid,
                      std::span<const double> values, double weight_power);

/// Fits the exact sphere-plate energy F(x) (minus `known`) against `basis`.
/// Rows carry weight x^{3/2}, i.e. the fit is on F x^{3/2}. The grid must lie
/// in (0, 0.05]. NeumannScalar throws NoExactSolution.
FitReport fit_expansion(TheoryKind theory, std::span<const BasisFunction> basis, std::span<const double> grid,
                        std::span<const KnownTerm> known = {});

/// Leading and next-to-leading conductor coefficients from a fit with basis
/// {x^-3/2, x^-1/2, ln x, 1, x^1/2}.
struct NtloExtraction {
  FitReport report;
  double leading = 0.0;
  /// x^-1/2 coefficient divided by the leading one.
  double c1 = 0.0;
};
NtloExtraction extract_em_ntlo(double x_lo = 1e-5, double x_hi = 1e-3, int points = 60);

/// Dirichlet bracket beyond 1 + x/4: the leading two terms are removed and
/// {x^1/2, 1, ln x, x^3/2} are fitted.
struct DirichletNntloExtraction {
  FitReport report;
  /// Relative x^2 bracket coefficient.
  double c2 = 0.0;
  /// Coefficient of ln x in F (k_B T units).
  double log_coefficient = 0.0;
};
DirichletNntloExtraction extract_dirichlet_nntlo(double x_lo = 1e-4, double x_hi = 1e-2, int points = 60);

struct LogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

/// Fits D(x) = -F_exact - (sqrt(2) pi^4/1440) x^{-3/2} (1 + c1 x) to a ln x + b
/// on a log-spaced grid in [x_lo, x_hi] within [1e-6, 1e-3].
LogFit fit_log_nntlo(double x_lo, double x_hi, int points = 60);

/// Fits -F_exact(mu) to {mu^-3, mu^-1, ln(mu/pi), 1, mu} on [mu_lo, mu_hi]
/// and returns the result as a Fitted mu-form coefficient set.
ExpansionCoefficients fit_mu_expansion(double mu_lo = 0.02, double mu_hi = 0.3, int points = 60);

struct SweepRow {
  double x = 0.0;
  double f_exact = 0.0;
  double f_pfa = 0.0;
  double f_de2 = 0.0;
  double f_asym_fitted = 0.0;
  double err_pfa_pct = 0.0;
  double err_de_pct = 0.0;
};

/// Sphere-plate comparison at each x (positive, ascending). Points are
/// evaluated concurrently; rows come back in input order. A convergence
/// failure is rethrown with the offending x in the message.
std::vector<SweepRow> sweep(TheoryKind theory, std::span<const double> x_values, double tol = kDefaultTolerance);

/// `count` log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int count);
/// Log-spaced points with a fixed density per decade, including both ends.
std::vector<double> log_grid_per_decade(double lo, double hi, int points_per_decade);

struct Figure1Row {
  double x = 0.0;
  double ratio = 0.0;  // F_exact / F_pfa
};
struct Figure2Row {
  double log10inv_x = 0.0;
  double err_pfa_pct = 0.0;
  double err_de_pct = 0.0;
};
struct FigureData {
  std::vector<Figure1Row> fig1;
  std::vector<Figure2Row> fig2;
};

/// Default figure range: 40 points per decade over [1e-4, 1e-1].
std::vector<double> default_figure_grid();
FigureData figure_data(std::span<const SweepRow> rows);

}  // namespace casimir4d
