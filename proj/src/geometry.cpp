#include "casimir4d/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace casimir4d {
namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " + std::to_string(value));
  }
}

double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// arccosh(1 + t) for t > 0 without forming 1 + t first.
double acosh1p(double t) { return std::log1p(t + std::sqrt(t * (t + 2.0))); }

}  // namespace

SphereSphereGeometry::SphereSphereGeometry(double r1, double r2, double gap)
    : r1_(r1), r2_(r2), gap_(gap) {
  require_positive(r1, "r1");
  require_positive(r2, "r2");
  require_positive(gap, "gap");
}

SpherePlateGeometry::SpherePlateGeometry(double radius, double gap) : radius_(radius), gap_(gap) {
  require_positive(radius, "radius");
  require_positive(gap, "gap");
}

ConcentricPair ConcentricPair::from_rho(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw DomainError("rho must lie in (0, 1), got " + std::to_string(rho));
  }
  return ConcentricPair(rho, -std::log(rho));
}

ConcentricPair ConcentricPair::from_mu(double mu) {
  if (!std::isfinite(mu) || !(mu > 0.0)) {
    throw DomainError("mu must be finite and > 0, got " + std::to_string(mu));
  }
  return ConcentricPair(std::exp(-mu), mu);
}

ConcentricPair ConcentricPair::from_radii(double r_minus, double r_plus) {
  require_positive(r_minus, "r_minus");
  require_positive(r_plus, "r_plus");
  if (!(r_minus < r_plus)) throw DomainError("concentric radii require r_minus < r_plus");
  return from_rho(r_minus / r_plus);
}

void ConformalMapParams::validate() const {
  require_positive(scale, "scale");
  require_positive(r_minus, "r_minus");
  require_positive(r_plus, "r_plus");
  if (std::abs(std::sqrt(dot(axis, axis)) - 1.0) > 1e-12) {
    throw DomainError("conformal map axis must be a unit four-vector");
  }
  if (!(r_minus < scale && scale < r_plus)) {
    throw DomainError(
        "scale must lie strictly between r_minus and r_plus; other values give the interior "
        "(sphere inside sphere) configuration, which is not supported");
  }
}

double kappa_of_geometry(const SphereSphereGeometry& geom) {
  const double s = geom.center_distance();
  const double r1 = geom.r1();
  const double r2 = geom.r2();
  return (s * s - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
}

ConcentricPair concentric_of_kappa(double kappa) {
  if (!std::isfinite(kappa) || !(kappa > 1.0)) {
    throw DomainError("kappa must exceed 1 (touching or overlapping spheres otherwise), got " +
                      std::to_string(kappa));
  }
  const double root = kappa + std::sqrt(kappa - 1.0) * std::sqrt(kappa + 1.0);
  return ConcentricPair::from_mu(std::log(root));
}

ConcentricPair concentric_of_geometry(const SphereSphereGeometry& geom) {
  const double d = geom.gap();
  const double kappa_minus_one = d * (d + 2.0 * geom.r1() + 2.0 * geom.r2()) / (2.0 * geom.r1() * geom.r2());
  return ConcentricPair::from_mu(acosh1p(kappa_minus_one));
}

double mu_of_sphere_plate(double x) {
  require_positive(x, "x");
  return acosh1p(x);
}

double sphere_plate_x_of_mu(double mu) {
  require_positive(mu, "mu");
  // cosh(mu) - 1 = 2 sinh^2(mu/2)
  const double s = std::sinh(0.5 * mu);
  return 2.0 * s * s;
}

SphereSphereGeometry map_concentric_to_eccentric(const ConformalMapParams& params) {
  params.validate();
  const double r = params.scale;
  const double rm = params.r_minus;
  const double rp = params.r_plus;
  const double r1 = 4.0 * r * r * rp / ((rp - r) * (rp + r));
  const double r2 = 4.0 * r * r * rm / ((r - rm) * (r + rm));
  const double gap = 4.0 * r * r * (rp - rm) / ((r + rp) * (r + rm));
  return SphereSphereGeometry(r1, r2, gap);
}

Vec4 conformal_map_point(const Vec4& r, const ConformalMapParams& params) {
  params.validate();
  Vec4 shifted;
  for (int i = 0; i < 4; ++i) shifted[i] = r[i] + params.scale * params.axis[i];
  const double norm2 = dot(shifted, shifted);
  if (norm2 == 0.0) throw SingularPointError("point coincides with the inversion pole r = -R");

  Vec4 w;
  const double shift = 1.0 / (2.0 * params.scale);
  for (int i = 0; i < 4; ++i) w[i] = shifted[i] / norm2 - shift * params.axis[i];
  const double w2 = dot(w, w);
  const double w_scale = std::max(1.0 / std::sqrt(norm2), shift);
  if (!(w2 > 0.0) || std::sqrt(w2) <= 16.0 * std::numeric_limits<double>::epsilon() * w_scale) {
    throw SingularPointError("point is mapped to infinity by the conformal map");
  }
  Vec4 image;
  for (int i = 0; i < 4; ++i) image[i] = w[i] / w2;
  return image;
}

}  // namespace casimir4d
