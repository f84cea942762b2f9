#include "casimir4d/gradient.hpp"

#include <cmath>
#include <string>

#include "casimir4d/proximity.hpp"

namespace casimir4d {
namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
  }
}

}  // namespace

KernelModel KernelModel::tm() {
  return {Polarization::TM, kPi2 / 480.0, kPi4 / 1080.0, 0.0, -(45.0 + kPi4) * kPi2 / 6750.0};
}

KernelModel KernelModel::te() {
  return {Polarization::TE, kPi2 / 480.0, kPi2 * (kPi2 - 30.0) / 1080.0, kPi2 * kPi / 32.0,
          -(1095.0 + 50.0 * kPi2 + kPi4) * kPi2 / 6750.0};
}

double kernel_value(const KernelModel& model, double x) {
  const double x2 = x * x;
  return model.c0 + x2 * (model.c2 + x * model.c3 + x2 * model.c4);
}

std::vector<KernelModel> kernels_for(TheoryKind theory) {
  switch (theory) {
    case TheoryKind::ElectromagneticConductor:
      return {KernelModel::tm(), KernelModel::te()};
    case TheoryKind::DirichletScalar:
      return {KernelModel::tm()};
    case TheoryKind::NeumannScalar:
      return {KernelModel::te()};
  }
  return {};
}

double assemble_full_kernel(TheoryKind theory, double k, double gap) {
  require_positive(gap, "d");
  if (!(k >= 0.0)) throw DomainError("momentum k must be >= 0");
  const double x = gap * k / (2.0 * kPi);
  double sum = 0.0;
  for (const auto& model : kernels_for(theory)) sum += kernel_value(model, x);
  return -2.0 / std::pow(gap, 5) * sum;
}

SecondOrderMatch second_order_match(TheoryKind theory, double gap) {
  require_positive(gap, "d");
  SecondOrderMatch match;
  double c0 = 0.0;
  double c2 = 0.0;
  for (const auto& model : kernels_for(theory)) {
    c0 += model.c0;
    c2 += model.c2;
    match.cubic_present = match.cubic_present || model.c3 != 0.0;
  }
  const double scale = -2.0 / std::pow(gap, 5);
  const double arg = gap / (2.0 * kPi);  // x = arg * k
  match.gamma = scale * c0;
  match.delta = scale * c2 * arg * arg;
  match.beta = match.delta / plane_plane_density(gap, theory);
  return match;
}

PlanePlaneConsistency pp_consistency_check(TheoryKind theory, double gap) {
  require_positive(gap, "d");
  PlanePlaneConsistency check;
  // F_pp = u / d^3  =>  F_pp'' = 12 u / d^5 = 12 F_pp / d^2.
  check.second_derivative = 12.0 * plane_plane_density(gap, theory) / (gap * gap);
  check.twice_gamma = 2.0 * second_order_match(theory, gap).gamma;
  check.residual = std::abs(check.second_derivative - check.twice_gamma) / std::abs(check.twice_gamma);
  check.consistent = check.residual <= 1e-14;
  return check;
}

EnergyValue de2_energy(double x, TheoryKind theory) {
  EnergyValue e = pfa_leading(x, theory);
  const double beta = second_order_match(theory, 1.0).beta;
  e.value *= 1.0 + (6.0 * beta - 3.75) * x;
  return e;
}

DE4Params DE4Params::with_matched_beta(TheoryKind theory) {
  DE4Params p;
  p.beta = second_order_match(theory, 1.0).beta;
  return p;
}

double de4_x2_coefficient(const DE4Params& p) {
  return -15.0 * (7.0 / 32.0 + 0.5 * p.beta + 28.8 * p.beta1 + 9.6 * p.beta2 + 9.6 * p.beta3 + 4.0 * p.beta4);
}

EnergyValue de4_energy(double x, const DE4Params& params, TheoryKind theory) {
  for (double b : {params.beta, params.beta1, params.beta2, params.beta3, params.beta4}) {
    if (!std::isfinite(b)) throw DomainError("DE4 coefficients must be finite");
  }
  EnergyValue e = pfa_leading(x, theory);
  e.value *= 1.0 + (6.0 * params.beta - 3.75) * x + de4_x2_coefficient(params) * x * x;
  return e;
}

}  // namespace casimir4d
