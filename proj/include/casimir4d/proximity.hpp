#pragma once

#include "casimir4d/core.hpp"

namespace casimir4d {

enum class ProfileKind { Parabolic, SphericalCap };

/// Local separation H(r_perp) between a three-plane and a curved surface of
/// radius R whose closest point is at distance d.
struct HeightProfile {
  ProfileKind kind = ProfileKind::Parabolic;
  double radius = 1.0;

  /// Parabolic: d + r^2/(2R). SphericalCap: d + R - sqrt(R^2 - r^2), r <= R.
  double height(double gap, double r_perp) const;
};

/// Plane-plane energy per unit three-volume in k_B T units: -pi^2/(720 d^3)
/// for the conductor and half of that for either scalar.
double plane_plane_density(double gap, TheoryKind theory);

/// Leading proximity-force energy of the sphere-plate system,
/// -(sqrt(2) pi^4/1440) x^{-3/2} for the conductor, half for scalars.
EnergyValue pfa_leading(double x, TheoryKind theory);

inline constexpr double kPfaQuadratureTolerance = 1e-9;

/// 4 pi int r^2 F_pp(H(r)) dr by adaptive Gauss-Kronrod quadrature. The
/// parabolic range uses t = r / sqrt(2 R d) mapped onto [0, 1) by t = u / (1 - u);
/// the cap is integrated over r = R sin(theta), 0 <= theta <= pi/2.
EnergyValue pfa_quadrature(const HeightProfile& profile, double gap, TheoryKind theory);

}  // namespace casimir4d
