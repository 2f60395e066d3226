#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_helpers.hpp"
#include "warpiso/spectrum.hpp"

using namespace warpiso;

namespace {
const WarpedProduct& model() {
  static const WarpedProduct m = WarpedProduct::fuchsian(2, 30.0);
  return m;
}
}  // namespace

TEST_CASE("truncated ground state matches the closed-form eigenvalue", "[spectrum]") {
  // Substituting v = f u turns the weighted problem into -v'' + v = lambda v,
  // so the Dirichlet bottom on [-L, L] is exactly 1 + (pi / 2L)^2.
  for (double L : {6.0, 12.0}) {
    const auto res = lambda0_truncated(model(), L, 4000, BoundaryCondition::Dirichlet);
    CHECK(std::abs(res.lambda0 - testref::lambda0_exact(L)) < 1e-5);
    CHECK(res.lambda0 > 1.0);
    CHECK(res.residual < 5e-8);
    CHECK(res.grid_n == 4000);
    CHECK(res.half_width == L);
  }
}

TEST_CASE("ground value decreases toward 1 as the window widens", "[spectrum]") {
  const auto l6 = lambda0_truncated(model(), 6.0, 4000, BoundaryCondition::Dirichlet);
  const auto l9 = lambda0_truncated(model(), 9.0, 4000, BoundaryCondition::Dirichlet);
  const auto l12 = lambda0_truncated(model(), 12.0, 4000, BoundaryCondition::Dirichlet);
  CHECK(l6.lambda0 > l9.lambda0);
  CHECK(l9.lambda0 > l12.lambda0);
  CHECK(l12.lambda0 > 1.0);
  // and the bottom dominates the squared isoperimetric half: lambda >= h^2/4
  const double h = testref::kTwoOverAlpha;
  CHECK(l12.lambda0 >= h * h / 4.0);
}

TEST_CASE("grid refinement converges at second order", "[spectrum]") {
  const double exact = testref::lambda0_exact(6.0);
  const double e1 =
      lambda0_truncated(model(), 6.0, 1000, BoundaryCondition::Dirichlet).lambda0 - exact;
  const double e2 =
      lambda0_truncated(model(), 6.0, 2000, BoundaryCondition::Dirichlet).lambda0 - exact;
  REQUIRE(e2 != 0.0);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
}

TEST_CASE("Neumann bottom is zero", "[spectrum]") {
  const auto res = lambda0_truncated(model(), 8.0, 2000, BoundaryCondition::Neumann);
  CHECK(std::abs(res.lambda0) < 1e-8);
  CHECK(res.residual < 1e-8);
  CHECK(res.bc == BoundaryCondition::Neumann);
}

TEST_CASE("Rayleigh quotient of sech matches its closed form", "[spectrum]") {
  // num = int tanh^2 = 2(L - tanh L); den = int 1 = 2L.
  for (double L : {6.0, 12.0}) {
    const double r = rayleigh_quotient(model(), RadialFunction::sech_r(), L);
    CHECK(std::abs(r - (1.0 - std::tanh(L) / L)) < 1e-9);
  }
  const auto res = lambda0_truncated(model(), 12.0, 1000, BoundaryCondition::Dirichlet);
  CHECK(std::abs(res.rayleigh_of_sech - testref::kRayleighSech12) < 1e-9);
}

TEST_CASE("Rayleigh quotient of tanh decays like the closed form", "[spectrum]") {
  // num = int sech^2 = 2 tanh L; den = int sinh^2 = sinh L cosh L - L.
  const double L = 15.0;
  const double r = rayleigh_quotient(model(), RadialFunction::tanh_r(), L);
  const double exact = 2.0 * std::tanh(L) / (std::sinh(L) * std::cosh(L) - L);
  CHECK(r >= 0.0);
  CHECK(std::abs(r - exact) < 1e-8 * exact);
}

TEST_CASE("Rayleigh quotient edge cases", "[spectrum]") {
  CHECK(rayleigh_quotient(model(), RadialFunction::constant(3.0), 5.0) == 0.0);
  CHECK_THROWS_AS(rayleigh_quotient(model(), RadialFunction::constant(0.0), 5.0),
                  domain_error);
  CHECK_THROWS_AS(rayleigh_quotient(model(), RadialFunction::sech_r(), 0.0), domain_error);
  CHECK_THROWS_AS(rayleigh_quotient(model(), RadialFunction::sech_r(), -1.0), domain_error);
}

TEST_CASE("truncated solver input validation", "[spectrum]") {
  CHECK_THROWS_AS(lambda0_truncated(model(), 0.0, 1000, BoundaryCondition::Dirichlet),
                  domain_error);
  CHECK_THROWS_AS(lambda0_truncated(model(), -3.0, 1000, BoundaryCondition::Dirichlet),
                  domain_error);
  CHECK_THROWS_AS(lambda0_truncated(model(), 6.0, 99, BoundaryCondition::Dirichlet),
                  domain_error);
  // cosh(400)^2 overflows the node weights
  CHECK_THROWS_AS(lambda0_truncated(model(), 400.0, 1000, BoundaryCondition::Dirichlet),
                  domain_error);
}

TEST_CASE("end-invariant bottom d(2-d)", "[spectrum]") {
  CHECK(sullivan_lambda0(2.0) == 0.0);
  CHECK(sullivan_lambda0(1.0) == 1.0);
  CHECK(std::abs(sullivan_lambda0(1.5) - 0.75) < 1e-15);
  CHECK_THROWS_AS(sullivan_lambda0(0.9), domain_error);
  CHECK_THROWS_AS(sullivan_lambda0(2.1), domain_error);
}

TEST_CASE("base area does not move the spectrum", "[spectrum]") {
  const WarpedProduct g5 = WarpedProduct::fuchsian(5, 30.0);
  const auto a = lambda0_truncated(model(), 6.0, 1000, BoundaryCondition::Dirichlet);
  const auto b = lambda0_truncated(g5, 6.0, 1000, BoundaryCondition::Dirichlet);
  CHECK(a.lambda0 == b.lambda0);  // the weight f^2 is identical; area cancels
}
