#pragma once

#include <vector>

#include "casimir4d/core.hpp"

namespace casimir4d {

enum class Polarization { TM, TE };

/// Small-momentum expansion G(x) = c0 + c2 x^2 + c3 x^3 + c4 x^4 of one
/// polarization's contribution to the second-order perturbative kernel.
struct KernelModel {
  Polarization polarization = Polarization::TM;
  double c0 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;

  static KernelModel tm();
  static KernelModel te();
};

double kernel_value(const KernelModel& model, double x);

/// Polarizations contributing to a theory: both for the conductor, TM for a
/// Dirichlet scalar, TE for a Neumann scalar.
std::vector<KernelModel> kernels_for(TheoryKind theory);

/// G(k; d) = -(2 / d^5) sum_pol G_pol(d k / (2 pi)), in k_B T units.
double assemble_full_kernel(TheoryKind theory, double k, double gap);

/// Second-order matching of the derivative expansion to the kernel:
/// G(k; d) = gamma + delta k^2 + ..., beta = delta / F_pp(d).
struct SecondOrderMatch {
  double gamma = 0.0;
  double delta = 0.0;
  double beta = 0.0;
  /// A k^3 term is present, so the kernel is not analytic beyond k^2.
  bool cubic_present = false;
};

SecondOrderMatch second_order_match(TheoryKind theory, double gap);

/// Compares F_pp''(d), differentiated analytically from plane_plane_density,
/// with 2 gamma(d).
struct PlanePlaneConsistency {
  double second_derivative = 0.0;
  double twice_gamma = 0.0;
  /// |F_pp'' - 2 gamma| / |2 gamma|
  double residual = 0.0;
  bool consistent = false;
};

PlanePlaneConsistency pp_consistency_check(TheoryKind theory, double gap);

/// pfa_leading(x) * (1 + (6 beta - 15/4) x).
EnergyValue de2_energy(double x, TheoryKind theory);

/// Coefficients of the four-derivative gradient expansion. No values are
/// shipped for the conductor: its kernel has no fourth-order Taylor expansion.
struct DE4Params {
  double beta = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double beta4 = 0.0;

  /// beta from second_order_match, beta1..beta4 zero.
  static DE4Params with_matched_beta(TheoryKind theory);
};

/// Coefficient of x^2 (relative to PFA) in the fourth-order expansion:
/// -15 (7/32 + beta/2 + 144/5 beta1 + 48/5 beta2 + 48/5 beta3 + 4 beta4).
double de4_x2_coefficient(const DE4Params& params);

/// pfa_leading(x) * [1 + (6 beta - 15/4) x + de4_x2_coefficient(params) x^2].
EnergyValue de4_energy(double x, const DE4Params& params, TheoryKind theory);

}  // namespace casimir4d
