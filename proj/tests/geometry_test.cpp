#include <cmath>
#include <random>

#include <doctest.h>

#include "casimir4d/geometry.hpp"

using namespace casimir4d;

// Relative comparison (doctest adds an absolute floor of epsilon by default).
inline doctest::Approx Rel(double v) { return doctest::Approx(v).scale(0.0); }

namespace {

double norm(const Vec4& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]); }

Vec4 random_on_sphere(std::mt19937_64& rng, double radius) {
  std::normal_distribution<double> gauss;
  Vec4 v{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  const double n = norm(v);
  for (double& c : v) c *= radius / n;
  return v;
}

// Center of the three-sphere through four points given as r'
// satisfying |r' - c|^2 = R^2; solve the 4x4 linear system from differences.
struct FittedSphere {
  Vec4 center;
  double radius;
};

FittedSphere sphere_through(const std::array<Vec4, 5>& p) {
  double a[4][5];
  for (int i = 0; i < 4; ++i) {
    double rhs = 0.0;
    for (int k = 0; k < 4; ++k) {
      a[i][k] = 2.0 * (p[i + 1][k] - p[0][k]);
      rhs += p[i + 1][k] * p[i + 1][k] - p[0][k] * p[0][k];
    }
    a[i][4] = rhs;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    for (int k = 0; k < 5; ++k) std::swap(a[col][k], a[piv][k]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int k = 0; k < 5; ++k) a[r][k] -= f * a[col][k];
    }
  }
  Vec4 c{};
  for (int i = 0; i < 4; ++i) c[i] = a[i][4] / a[i][i];
  Vec4 d{};
  for (int k = 0; k < 4; ++k) d[k] = p[0][k] - c[k];
  return {c, norm(d)};
}

}  // namespace

TEST_CASE("kappa for the image of the default concentric pair") {
  CHECK(kappa_of_geometry(SphereSphereGeometry(8.0 / 3.0, 8.0 / 3.0, 4.0 / 3.0)) == Rel(2.125).epsilon(1e-14));
  CHECK(kappa_of_geometry(SphereSphereGeometry(1, 1, 1)) == Rel(3.5).epsilon(1e-14));
  CHECK(kappa_of_geometry(SphereSphereGeometry(1, 1, 1e-9)) == Rel(1.0).epsilon(1e-8));
}

TEST_CASE("concentric ratio from kappa") {
  CHECK(concentric_of_kappa(2.125).rho() == Rel(0.25).epsilon(1e-14));
  CHECK(concentric_of_kappa(3.5).rho() == Rel(3.5 - std::sqrt(11.25)).epsilon(1e-14));
  CHECK(concentric_of_kappa(3.5).rho() == Rel(0.1458980).epsilon(1e-6));
  CHECK(concentric_of_kappa(1.0 + 1e-12).rho() > 0.999998);
  CHECK_THROWS_AS(concentric_of_kappa(1.0), DomainError);
  CHECK_THROWS_AS(concentric_of_kappa(0.5), DomainError);
  CHECK_THROWS_AS(concentric_of_kappa(std::nan("")), DomainError);
}

TEST_CASE("sphere-plate mu") {
  CHECK(mu_of_sphere_plate(1.0) == Rel(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-15));
  CHECK(mu_of_sphere_plate(1.0) == Rel(1.3169579).epsilon(1e-7));
  CHECK(mu_of_sphere_plate(std::cosh(0.2) - 1.0) == Rel(0.2).epsilon(1e-14));
  for (double x : {1e-12, 1e-8, 1e-5}) CHECK(mu_of_sphere_plate(x) / std::sqrt(2.0 * x) == Rel(1.0).epsilon(x));
  for (double mu : {1e-6, 0.01, 0.2, 3.0}) CHECK(mu_of_sphere_plate(sphere_plate_x_of_mu(mu)) == Rel(mu).epsilon(1e-14));
  CHECK_THROWS_AS(mu_of_sphere_plate(0.0), DomainError);
  CHECK_THROWS_AS(mu_of_sphere_plate(-1.0), DomainError);
}

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(SphereSphereGeometry(0, 1, 1), DomainError);
  CHECK_THROWS_AS(SphereSphereGeometry(1, -1, 1), DomainError);
  CHECK_THROWS_AS(SphereSphereGeometry(1, 1, 0), DomainError);
  CHECK_THROWS_AS(SphereSphereGeometry(1, 1, INFINITY), DomainError);
  CHECK_THROWS_AS(SpherePlateGeometry(1, 0), DomainError);
  CHECK(SpherePlateGeometry(4, 0.2).x() == Rel(0.05));
  CHECK_THROWS_AS(ConcentricPair::from_rho(1.0), DomainError);
  CHECK_THROWS_AS(ConcentricPair::from_rho(0.0), DomainError);
  CHECK_THROWS_AS(ConcentricPair::from_mu(0.0), DomainError);
  CHECK_THROWS_AS(ConcentricPair::from_radii(2.0, 1.0), DomainError);
  CHECK(ConcentricPair::from_radii(0.5, 2.0).rho() == Rel(0.25));
  CHECK(ConcentricPair::from_rho(0.5).mu() == Rel(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("concentric to eccentric map") {
  const auto g = map_concentric_to_eccentric(ConformalMapParams{});
  CHECK(g.r1() == Rel(8.0 / 3.0).epsilon(1e-14));
  CHECK(g.r2() == Rel(8.0 / 3.0).epsilon(1e-14));
  CHECK(g.gap() == Rel(4.0 / 3.0).epsilon(1e-14));

  // Plate limit: R1 grows without bound as scale -> r_plus.
  ConformalMapParams near_plate;
  near_plate.scale = 2.0 - 1e-6;
  CHECK(map_concentric_to_eccentric(near_plate).r1() > 1e5);

  ConformalMapParams bad;
  bad.scale = 0.4;
  CHECK_THROWS_AS(map_concentric_to_eccentric(bad), DomainError);
  bad.scale = 2.0;
  CHECK_THROWS_AS(map_concentric_to_eccentric(bad), DomainError);
  bad.scale = 1.0;
  bad.axis = {1.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(map_concentric_to_eccentric(bad), DomainError);
}

TEST_CASE("conformal map of axis points") {
  const ConformalMapParams p;
  const auto check = [&](Vec4 in, double expected) {
    const Vec4 out = conformal_map_point(in, p);
    CHECK(out[0] == Rel(expected).epsilon(1e-14));
    CHECK(std::abs(out[1]) + std::abs(out[2]) + std::abs(out[3]) == 0.0);
  };
  check({0.5, 0, 0, 0}, 6.0);
  check({-0.5, 0, 0, 0}, 2.0 / 3.0);
  check({2.0, 0, 0, 0}, -6.0);
  check({-2.0, 0, 0, 0}, -2.0 / 3.0);
  // Image gap between the two spheres.
  CHECK(2.0 / 3.0 - (-2.0 / 3.0) == Rel(4.0 / 3.0));

  CHECK_THROWS_AS(conformal_map_point({-1.0, 0, 0, 0}, p), SingularPointError);
  // r + R = 2R is sent to infinity.
  CHECK_THROWS_AS(conformal_map_point({1.0, 0, 0, 0}, p), SingularPointError);
}

TEST_CASE("conformal map sends concentric spheres to spheres of the predicted radii") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    ConformalMapParams p;
    p.r_minus = 0.2 + 0.6 * uni(rng);
    p.r_plus = p.r_minus + 0.5 + 2.0 * uni(rng);
    p.scale = p.r_minus + (0.1 + 0.8 * uni(rng)) * (p.r_plus - p.r_minus);
    Vec4 axis = random_on_sphere(rng, 1.0);
    p.axis = axis;
    const auto image = map_concentric_to_eccentric(p);

    for (auto [radius, predicted] : {std::pair{p.r_minus, image.r2()}, std::pair{p.r_plus, image.r1()}}) {
      std::array<Vec4, 5> first;
      for (auto& q : first) q = conformal_map_point(random_on_sphere(rng, radius), p);
      const FittedSphere s = sphere_through(first);
      CHECK(s.radius == Rel(predicted).epsilon(1e-9));
      double worst = 0.0;
      for (int i = 0; i < 120; ++i) {
        const Vec4 q = conformal_map_point(random_on_sphere(rng, radius), p);
        Vec4 diff{};
        for (int k = 0; k < 4; ++k) diff[k] = q[k] - s.center[k];
        worst = std::max(worst, std::abs(norm(diff) - predicted) / predicted);
      }
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("round trip through kappa recovers the radii ratio") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    ConformalMapParams p;
    p.r_minus = 0.05 + uni(rng);
    p.r_plus = p.r_minus * (1.05 + 20.0 * uni(rng));
    p.scale = p.r_minus + (0.02 + 0.96 * uni(rng)) * (p.r_plus - p.r_minus);
    const double rho = concentric_of_kappa(kappa_of_geometry(map_concentric_to_eccentric(p))).rho();
    CHECK(rho == Rel(p.r_minus / p.r_plus).epsilon(1e-12));
  }
}

TEST_CASE("plate limit of the sphere-sphere route") {
  for (double x : {1e-4, 1e-3, 0.01, 0.1, 1.0}) {
    const double r2 = 1.0;
    const auto pair = concentric_of_geometry(SphereSphereGeometry(1e8 * r2, r2, x * r2));
    CHECK(pair.mu() == Rel(mu_of_sphere_plate(x)).epsilon(1e-6));
  }
}

TEST_CASE("small gaps keep mu accurate") {
  // kappa - 1 = d (d + 2 R1 + 2 R2) / (2 R1 R2) = 1e-12 for unit radii, mu ~ sqrt(2 (kappa - 1)).
  const auto pair = concentric_of_geometry(SphereSphereGeometry(1, 1, 5e-13));
  CHECK(pair.mu() == Rel(std::sqrt(2.0) * 1e-6).epsilon(1e-6));
}

TEST_CASE("rho decreases with the gap") {
  double previous = 1.0;
  for (double d = 1e-6; d < 100.0; d *= 1.7) {
    const double rho = concentric_of_geometry(SphereSphereGeometry(1.3, 0.7, d)).rho();
    CHECK(rho < previous);
    previous = rho;
  }
}
