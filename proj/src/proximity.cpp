#include "casimir4d/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace casimir4d {
namespace {

constexpr double kPi2 = kPi * kPi;

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
  }
}

double density_coefficient(TheoryKind theory) {
  return theory == TheoryKind::ElectromagneticConductor ? kPi2 / 720.0 : kPi2 / 1440.0;
}

template <class F>
double integrate(F f, double lo, double hi) {
  using Integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
  double error = 0.0;
  double l1 = 0.0;
  const double value = Integrator::integrate(f, lo, hi, 30, kPfaQuadratureTolerance * 1e-2, &error, &l1);
  if (!std::isfinite(value) || error > kPfaQuadratureTolerance * std::abs(value)) {
    throw ConvergenceError("PFA quadrature did not converge: estimated error " + std::to_string(error) +
                           " for integral " + std::to_string(value));
  }
  return value;
}

}  // namespace

double HeightProfile::height(double gap, double r_perp) const {
  switch (kind) {
    case ProfileKind::Parabolic:
      return gap + r_perp * r_perp / (2.0 * radius);
    case ProfileKind::SphericalCap: {
      if (r_perp > radius) throw DomainError("spherical cap height requested beyond r_perp = R");
      // R - sqrt(R^2 - r^2) without cancellation.
      return gap + r_perp * r_perp / (radius + std::sqrt((radius - r_perp) * (radius + r_perp)));
    }
  }
  return gap;
}

double plane_plane_density(double gap, TheoryKind theory) {
  require_positive(gap, "d");
  return -density_coefficient(theory) / (gap * gap * gap);
}

EnergyValue pfa_leading(double x, TheoryKind theory) {
  require_positive(x, "x");
  const double em = -std::sqrt(2.0) * kPi2 * kPi2 / 1440.0 / (x * std::sqrt(x));
  return EnergyValue{theory == TheoryKind::ElectromagneticConductor ? em : 0.5 * em, 0, 0.0};
}

EnergyValue pfa_quadrature(const HeightProfile& profile, double gap, TheoryKind theory) {
  require_positive(gap, "d");
  require_positive(profile.radius, "R");
  const double a = std::sqrt(2.0 * profile.radius * gap);

  if (profile.kind == ProfileKind::SphericalCap) {
    // r = R sin(theta) removes the square-root endpoint singularity at r = R;
    // H = d + 2 R sin^2(theta/2). Pieces grow geometrically from the width
    // sqrt(2d/R) of the contributing region.
    const double radius = profile.radius;
    const auto integrand = [&](double theta) {
      const double s = std::sin(0.5 * theta);
      const double sin_theta = std::sin(theta);
      return sin_theta * sin_theta * std::cos(theta) *
             plane_plane_density(gap + 2.0 * radius * s * s, theory);
    };
    double integral = 0.0;
    double lo = 0.0;
    double hi = std::min(0.5 * kPi, a / radius);
    while (lo < 0.5 * kPi) {
      integral += integrate(integrand, lo, hi);
      lo = hi;
      hi = std::min(0.5 * kPi, 4.0 * hi);
    }
    return EnergyValue{4.0 * kPi * radius * radius * radius * integral, 0, 0.0};
  }

  const auto integrand = [&](double t) { return t * t * plane_plane_density(profile.height(gap, a * t), theory); };
  const double integral = integrate(
      [&](double u) {
        const double one_minus = 1.0 - u;
        return integrand(u / one_minus) / (one_minus * one_minus);
      },
      0.0, 1.0);
  return EnergyValue{4.0 * kPi * a * a * a * integral, 0, 0.0};
}

}  // namespace casimir4d
