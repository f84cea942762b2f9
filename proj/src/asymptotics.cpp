#include "casimir4d/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

namespace casimir4d {
namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;
const double kSqrt2 = std::sqrt(2.0);

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
  }
}

std::map<double, double> em_bracket() {
  return {
      {0.0, 1.0},
      {1.0, 0.25 - 60.0 / kPi2},
      {1.5, 0.0},  // no x^{3/2} power; that order is the logarithm
      {2.0, 132.0 / kPi4 - 7.0 / 480.0 - 5.0 / kPi2},
      {2.5, 30.0 * kSqrt2 / kPi4},
      {3.0, 457.0 / 120960.0 - 11.0 / kPi4 + 17.0 / (24.0 * kPi2)},
      {3.5, -11.0 / (kSqrt2 * kPi4)},
  };
}

}  // namespace

double em_pfa_prefactor() { return kSqrt2 * kPi4 / 1440.0; }

ExpansionCoefficients em_mu_printed() {
  ExpansionCoefficients c;
  c.form = ExpansionForm::Mu;
  c.variant = ExpansionVariant::Printed;
  c.powers = {{-3.0, kPi4 / 360.0}, {-1.0, kPi2 / 12.0}, {1.0, 11.0 / 120.0}};
  c.log_coefficient = 0.5;
  c.log_argument_scale = 1.0 / kPi;
  c.constant = -kZeta3 / (4.0 * kPi2);
  return c;
}

ExpansionCoefficients em_mu_resolved() {
  ExpansionCoefficients c = em_mu_printed();
  c.variant = ExpansionVariant::Fitted;
  c.powers[-1.0] = -kPi2 / 12.0;
  c.log_coefficient = -0.5;
  return c;
}

ExpansionCoefficients em_mu_preset(ExpansionVariant variant) {
  return variant == ExpansionVariant::Printed ? em_mu_printed() : em_mu_resolved();
}

ExpansionCoefficients em_sphere_plate_printed() {
  ExpansionCoefficients c;
  c.form = ExpansionForm::SpherePlate;
  c.variant = ExpansionVariant::Printed;
  c.prefactor = em_pfa_prefactor();
  c.powers = em_bracket();
  c.log_coefficient = 0.25;
  c.log_argument_scale = 2.0 / kPi2;
  c.constant = kZeta3 / (4.0 * kPi2);
  return c;
}

ExpansionCoefficients em_sphere_plate_resolved() {
  ExpansionCoefficients c = em_sphere_plate_printed();
  c.variant = ExpansionVariant::Fitted;
  c.log_coefficient = -0.25;
  c.constant = -kZeta3 / (4.0 * kPi2);
  return c;
}

ExpansionCoefficients em_sphere_plate_preset(ExpansionVariant variant) {
  return variant == ExpansionVariant::Printed ? em_sphere_plate_printed() : em_sphere_plate_resolved();
}

ExpansionCoefficients dirichlet_sphere_plate_printed() {
  ExpansionCoefficients c;
  c.form = ExpansionForm::SpherePlate;
  c.variant = ExpansionVariant::Printed;
  c.prefactor = 0.5 * em_pfa_prefactor();
  c.powers = {
      {0.0, 1.0},
      {1.0, 0.25},
      {2.0, 12.0 / kPi4 - 7.0 / 480.0},
      {3.0, 457.0 / 120960.0 - 1.0 / kPi4},
  };
  c.constant = -kZeta3 / (8.0 * kPi2);
  return c;
}

EnergyValue em_asymptotic_mu(double mu, const ExpansionCoefficients& coeffs) {
  require_positive(mu, "mu");
  if (coeffs.form != ExpansionForm::Mu) throw DomainError("em_asymptotic_mu needs a mu-form coefficient set");
  double minus_f = coeffs.constant;
  for (const auto& [power, coefficient] : coeffs.powers) minus_f += coefficient * std::pow(mu, power);
  if (coeffs.log_coefficient != 0.0) minus_f += coeffs.log_coefficient * std::log(coeffs.log_argument_scale * mu);
  return EnergyValue{-minus_f, 0, 0.0};
}

EnergyValue em_sphere_plate_expansion(double x, double order, const ExpansionCoefficients& coeffs) {
  require_positive(x, "x");
  if (coeffs.form != ExpansionForm::SpherePlate) {
    throw DomainError("em_sphere_plate_expansion needs a sphere-plate coefficient set");
  }
  if (std::find(std::begin(kBracketExponents), std::end(kBracketExponents), order) == std::end(kBracketExponents)) {
    throw DomainError("unknown bracket exponent " + std::to_string(order));
  }
  double bracket = 0.0;
  for (const auto& [power, coefficient] : coeffs.powers) {
    if (power <= order) bracket += coefficient * std::pow(x, power);
  }
  double minus_f = coeffs.prefactor * bracket / (x * std::sqrt(x)) + coeffs.constant;
  if (coeffs.log_coefficient != 0.0) minus_f += coeffs.log_coefficient * std::log(coeffs.log_argument_scale * x);
  return EnergyValue{-minus_f, 0, 0.0};
}

EnergyValue dirichlet_sphere_plate_expansion(double x, const ExpansionCoefficients& coeffs) {
  return em_sphere_plate_expansion(x, kBracketExponents[std::size(kBracketExponents) - 1], coeffs);
}

}  // namespace casimir4d
