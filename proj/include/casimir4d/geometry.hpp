#pragma once

#include <array>

#include "casimir4d/core.hpp"

namespace casimir4d {

/// A point or direction in four-dimensional euclidean space.
using Vec4 = std::array<double, 4>;

/// Two three-spheres placed one outside the other.
///
/// Lengths are dimensionless: only the ratios entering kappa matter.
class SphereSphereGeometry {
 public:
  /// Throws DomainError unless all arguments are finite and strictly positive.
  SphereSphereGeometry(double r1, double r2, double gap);

  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }
  double gap() const noexcept { return gap_; }
  /// s = d + R1 + R2.
  double center_distance() const noexcept { return gap_ + r1_ + r2_; }

 private:
  double r1_;
  double r2_;
  double gap_;
};

/// A three-sphere of radius R at minimum distance d from a three-plane.
class SpherePlateGeometry {
 public:
  SpherePlateGeometry(double radius, double gap);

  double radius() const noexcept { return radius_; }
  double gap() const noexcept { return gap_; }
  /// x = d / R.
  double x() const noexcept { return gap_ / radius_; }

 private:
  double radius_;
  double gap_;
};

/// Concentric pair conformally equivalent to a two-body configuration.
///
/// Both rho = R-/R+ and mu = -ln(rho) are stored so that callers near
/// contact (rho -> 1) can work with mu without cancellation.
class ConcentricPair {
 public:
  /// Requires 0 < rho < 1.
  static ConcentricPair from_rho(double rho);
  /// Requires mu > 0.
  static ConcentricPair from_mu(double mu);
  /// Radii of the concentric spheres; requires 0 < r_minus < r_plus.
  static ConcentricPair from_radii(double r_minus, double r_plus);

  double rho() const noexcept { return rho_; }
  double mu() const noexcept { return mu_; }

 private:
  ConcentricPair(double rho, double mu) : rho_(rho), mu_(mu) {}
  double rho_;
  double mu_;
};

/// Parameters of the special conformal map
///   r'/r'^2 = (r + R)/|r + R|^2 - R/(2 R^2),  R = scale * axis,
/// applied to concentric spheres of radii r_minus < r_plus.
struct ConformalMapParams {
  double scale = 1.0;
  Vec4 axis{1.0, 0.0, 0.0, 0.0};
  double r_minus = 0.5;
  double r_plus = 2.0;

  /// Throws DomainError for a non-unit axis or non-positive radii, and for an
  /// interior image configuration (scale outside (r_minus, r_plus)).
  void validate() const;
};

/// kappa = (s^2 - R1^2 - R2^2) / (2 R1 R2); always > 1 for a positive gap.
double kappa_of_geometry(const SphereSphereGeometry& geom);

/// Root rho in (0,1) of rho^2 - 2 kappa rho + 1 = 0. Throws for kappa <= 1.
ConcentricPair concentric_of_kappa(double kappa);

/// Same as concentric_of_kappa(kappa_of_geometry(geom)) but evaluates
/// kappa - 1 = d (d + 2 R1 + 2 R2) / (2 R1 R2) directly, which keeps mu
/// accurate when the gap is small compared to the radii.
ConcentricPair concentric_of_geometry(const SphereSphereGeometry& geom);

/// mu = ln(1 + x + sqrt(x (2 + x))) = arccosh(1 + x) for the sphere-plate system.
double mu_of_sphere_plate(double x);

/// Inverse of mu_of_sphere_plate: x = cosh(mu) - 1.
double sphere_plate_x_of_mu(double mu);

/// Radii and gap of the two image spheres (R1 from r_plus, R2 from r_minus).
SphereSphereGeometry map_concentric_to_eccentric(const ConformalMapParams& params);

/// Image of a point under the conformal map. Throws SingularPointError at the
/// inversion pole r = -R and at points sent to infinity.
Vec4 conformal_map_point(const Vec4& r, const ConformalMapParams& params);

}  // namespace casimir4d
