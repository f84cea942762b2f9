#pragma once

#include <map>
#include <optional>

#include "casimir4d/core.hpp"

namespace casimir4d {

/// Which small-distance expansion a coefficient set parameterizes.
enum class ExpansionForm {
  /// -F/k_BT = sum_p powers[p] mu^p + log_coefficient ln(log_argument_scale mu) + constant
  Mu,
  /// -F/k_BT = prefactor x^{-3/2} sum_p powers[p] x^p
  ///           + log_coefficient ln(log_argument_scale x) + constant
  SpherePlate,
};

/// Printed: coefficients exactly as published.
/// Fitted: signs and values validated against the exact series.
enum class ExpansionVariant { Printed, Fitted };

/// Small-distance expansion coefficients.
///
/// For the sphere-plate form the power keys are bracket exponents relative to
/// the leading x^{-3/2} term (key 0 carries 1). For the mu form `prefactor`
/// is 1 and the keys are the absolute powers of mu.
struct ExpansionCoefficients {
  ExpansionForm form = ExpansionForm::Mu;
  ExpansionVariant variant = ExpansionVariant::Printed;
  double prefactor = 1.0;
  std::map<double, double> powers;
  double log_coefficient = 0.0;
  double log_argument_scale = 1.0;
  double constant = 0.0;
  /// Max residual of the fit that validated a Fitted set, in k_BT.
  std::optional<double> fit_residual;
};

/// Leading sphere-plate coefficient sqrt(2) pi^4 / 1440.
double em_pfa_prefactor();

/// Bracket exponents accepted as `order` by em_sphere_plate_expansion.
inline constexpr double kBracketExponents[] = {0.0, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};

/// -[pi^4/(360 mu^3) + pi^2/(12 mu) + (1/2) ln(mu/pi) - zeta(3)/(4 pi^2) + (11/120) mu]
ExpansionCoefficients em_mu_printed();
/// Same terms with the 1/mu and logarithmic terms entering with a minus sign.
/// This reproduces the exact series up to exponentially small terms.
ExpansionCoefficients em_mu_resolved();
ExpansionCoefficients em_mu_preset(ExpansionVariant variant);

/// Published sphere-plate bracket through x^{7/2} with +(1/4) ln(2x/pi^2) + zeta(3)/(4 pi^2).
ExpansionCoefficients em_sphere_plate_printed();
/// Same bracket; logarithm and constant enter with the opposite sign.
ExpansionCoefficients em_sphere_plate_resolved();
ExpansionCoefficients em_sphere_plate_preset(ExpansionVariant variant);

/// Dirichlet scalar: -(sqrt(2) pi^4/2880) x^{-3/2} [1 + x/4 + c2 x^2 + c3 x^3] + zeta(3)/(8 pi^2).
ExpansionCoefficients dirichlet_sphere_plate_printed();

/// Evaluates a Mu-form coefficient set at mu > 0.
EnergyValue em_asymptotic_mu(double mu, const ExpansionCoefficients& coeffs);

/// Evaluates a SpherePlate-form set, keeping bracket terms with exponent <=
/// order. `order` must be one of kBracketExponents.
EnergyValue em_sphere_plate_expansion(double x, double order, const ExpansionCoefficients& coeffs);

/// Evaluates the full Dirichlet sphere-plate set at x > 0.
EnergyValue dirichlet_sphere_plate_expansion(double x, const ExpansionCoefficients& coeffs);

}  // namespace casimir4d
