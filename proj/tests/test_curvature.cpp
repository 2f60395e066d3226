#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "warpiso/curvature.hpp"
#include "warpiso/radial.hpp"

using namespace warpiso;

TEST_CASE("hyperbolic base with cosh warp is Einstein with Ric = -2", "[curvature]") {
  const auto m = WarpedProduct::fuchsian(2);
  for (double r : uniform_grid(-20.0, 20.0, 1000)) {
    const auto c = curvature_at(m, r);
    CHECK(std::abs(c.ric_radial + 2.0) < 1e-12 * 2.0);
    CHECK(std::abs(c.ric_tangential + 2.0) < 1e-12 * 2.0);
    CHECK(std::abs(c.scalar + 6.0) < 1e-12 * 6.0);
  }
}

TEST_CASE("spherical base with cosh warp matches the closed forms", "[curvature]") {
  const auto m = WarpedProduct::spherical_cosh();
  for (double r : uniform_grid(-10.0, 10.0, 100)) {
    const auto c = curvature_at(m, r);
    const double t = std::tanh(r);
    const double s = 1.0 / std::cosh(r);
    CHECK(std::abs(c.ric_radial + 2.0) < 1e-12);
    CHECK(std::abs(c.ric_tangential + 2.0 * t * t) < 1e-10);
    CHECK(std::abs((c.scalar + 6.0) - 4.0 * s * s) < 1e-10);
  }
  const auto at0 = curvature_at(m, 0.0);
  CHECK(at0.ric_tangential == 0.0);
  CHECK(std::abs(at0.scalar + 2.0) < 1e-15);

  const auto at1 = curvature_at(m, 1.0);
  CHECK(std::abs(at1.ric_tangential - testref::kRicTangentialSphere1) < 1e-9);
  CHECK(std::abs((at1.scalar + 6.0) - testref::kScalarPlus6Sphere1) < 1e-9);
}

TEST_CASE("scalar curvature is the trace of the Ricci data", "[curvature]") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> radius(-6.0, 6.0);
  const auto hyp = WarpedProduct::fuchsian(3);
  const auto sph = WarpedProduct::spherical_cosh();
  for (int k = 0; k < 100; ++k) {
    const double r = radius(rng);
    for (const auto* m : {&hyp, &sph}) {
      const auto c = curvature_at(*m, r);
      const double trace = c.ric_radial + 2.0 * c.ric_tangential;
      CHECK(std::abs(c.scalar - trace) < 1e-12 * std::max(1.0, std::abs(trace)));
    }
  }
}

TEST_CASE("boundary energy is constant and equals the base area", "[curvature]") {
  const auto g2 = WarpedProduct::fuchsian(2);
  const double area2 = 4.0 * kPi;
  for (double r : uniform_grid(0.0, 20.0, 200)) {
    CHECK(std::abs(gauss_bonnet_energy(g2, r) - area2) < 1e-9 * area2);
    CHECK(std::abs(stability_integrand(g2, r) - 2.0 * area2) < 1e-9 * area2);
  }
  const auto g3 = WarpedProduct::fuchsian(3);
  CHECK(std::abs(gauss_bonnet_energy(g3, 1.0) - 8.0 * kPi) < 1e-9);

  CHECK_THROWS_AS(gauss_bonnet_energy(WarpedProduct::spherical_cosh(), 1.0),
                  domain_error);
  CHECK_THROWS_AS(stability_integrand(WarpedProduct::spherical_cosh(), 1.0),
                  domain_error);
}

TEST_CASE("energy ceiling accepts model slices and rejects excess", "[curvature]") {
  CHECK(energy_lower_bound_check(std::tanh(1.0), testref::kFourPiCoshSq1, 2));
  // a symmetric slab's two boundary slices together carry (1 - H^2) A = 8 pi,
  // exactly the 4 pi (2g - 2) ceiling for g = 2
  CHECK(energy_lower_bound_check(0.0, 8.0 * kPi, 2));
  CHECK_FALSE(energy_lower_bound_check(0.0, 8.1 * kPi, 2));
  CHECK(energy_lower_bound_check(0.0, 8.1 * kPi, 3));
  CHECK_THROWS_AS(energy_lower_bound_check(0.0, 4.0 * kPi, 1), domain_error);
  CHECK_THROWS_AS(energy_lower_bound_check(0.0, -1.0, 2), domain_error);
}

TEST_CASE("slices are umbilic and satisfy the Gauss relation", "[curvature]") {
  const auto m = WarpedProduct::fuchsian(2);
  for (double r : uniform_grid(-8.0, 8.0, 101)) {
    const auto s = SliceShape::at(m, r);
    CHECK(s.traceless_norm2 == 0.0);
    CHECK(std::abs(s.second_form_norm2 - 2.0 * s.mean_curvature * s.mean_curvature) <
          1e-15);
    // K_slice = K_ambient_tangential + H^2 for umbilic slices
    const double f = m.warp()(r);
    const double df = m.warp().deriv1(r);
    const double ambient = (m.base().curvature() - df * df) / (f * f);
    CHECK(std::abs(s.intrinsic_curvature - ambient -
                   s.mean_curvature * s.mean_curvature) < 1e-12);
  }
}

TEST_CASE("conformal coordinate is odd, monotone and asymptotes to pi/2",
          "[curvature]") {
  CHECK(conformal_coordinate(0.0) == 0.0);
  CHECK(std::abs(conformal_coordinate(20.0) - 0.5 * kPi) < 1e-8);
  double prev = -2.0;
  for (double r : uniform_grid(-5.0, 5.0, 101)) {
    const double v = conformal_coordinate(r);
    CHECK(v > prev);
    CHECK(std::abs(v + conformal_coordinate(-r)) < 1e-15);
    prev = v;
  }
}

TEST_CASE("blowup ratio grows without bound along the spherical family",
          "[curvature]") {
  const auto m = WarpedProduct::spherical_cosh();

  // literal formula at moderate radii, where direct subtraction is accurate
  for (double r : {1.0, 2.0, 5.0}) {
    const double sech = 1.0 / std::cosh(r);
    const double direct = 4.0 * sech * sech /
                          std::pow(2.0 * std::atan(std::tanh(r)) - 0.5 * kPi, 2);
    CHECK(std::abs(blowup_ratio(m, r) - direct) < 1e-9 * direct);
  }

  const double b5 = blowup_ratio(m, 5.0);
  const double b10 = blowup_ratio(m, 10.0);
  const double b15 = blowup_ratio(m, 15.0);
  CHECK(std::abs(b5 - testref::kBlowup5) < 1e-9 * testref::kBlowup5);
  CHECK(std::abs(b10 - testref::kBlowup10) < 1e-9 * testref::kBlowup10);
  CHECK(std::abs(b15 - testref::kBlowup15) < 1e-9 * testref::kBlowup15);
  CHECK(b5 < b10);
  CHECK(b10 < b15);
  CHECK(b10 > 1e3);

  CHECK_THROWS_AS(blowup_ratio(WarpedProduct::fuchsian(2), 5.0), domain_error);
}
