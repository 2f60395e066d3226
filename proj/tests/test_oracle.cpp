#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_helpers.hpp"
#include "warpiso/cheeger.hpp"
#include "warpiso/oracle.hpp"

using namespace warpiso;

namespace {
WarpedProduct flat_space(double window) {
  const auto flat = WarpFunction::custom(
      "flat", [](double) { return 1.0; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, true);
  return WarpedProduct(BaseSurface::hyperbolic(2), flat, window);
}
}  // namespace

TEST_CASE("discrete line weights integrate the warp", "[oracle]") {
  const auto m = WarpedProduct::fuchsian(2);
  const double L = 3.0;
  const auto line = DiscreteLine::build(m, L, 2000);
  REQUIRE(line.cells == 2000);
  REQUIRE(line.face_pos.front() == -L);
  REQUIRE(line.face_pos.back() == L);

  const double exact = m.warp().integral_sq(-L, L);
  CHECK(std::abs(line.volume(0, line.cells) - exact) < 1e-5 * exact);

  // midpoint weights are second order; refinement must shrink the defect
  const auto fine = DiscreteLine::build(m, L, 8000);
  CHECK(std::abs(fine.volume(0, fine.cells) - exact) <
        0.5 * std::abs(line.volume(0, line.cells) - exact));

  CHECK_THROWS_AS(DiscreteLine::build(m, 0.0, 2000), domain_error);
  CHECK_THROWS_AS(DiscreteLine::build(m, -1.0, 2000), domain_error);
  CHECK_THROWS_AS(DiscreteLine::build(m, 3.0, 15), domain_error);
}

TEST_CASE("single-interval optimum approximates the continuum slab", "[oracle]") {
  const auto m = WarpedProduct::fuchsian(2);
  const double L = 10.0;
  const int n = 6000;
  const double dr = 2.0 * L / n;
  const auto line = DiscreteLine::build(m, L, n);
  const auto cut = discrete_cheeger_intervals(line, 1);

  REQUIRE(cut.intervals.size() == 1);
  CHECK(std::abs(cut.quotient - testref::kTwoOverAlpha) < 2e-5);

  const auto& iv = cut.intervals[0];
  const double a = testref::kAlpha;
  CHECK(std::abs(iv.lo + a) < 3.0 * dr);
  CHECK(std::abs(iv.hi - a) < 3.0 * dr);
  CHECK(std::abs(iv.lo + iv.hi) < 2.0 * dr);  // symmetric up to quantization
  CHECK(iv.face_lo < iv.face_hi);
}

TEST_CASE("two components never beat the single slab here", "[oracle]") {
  const auto m = WarpedProduct::fuchsian(2);
  const auto line = DiscreteLine::build(m, 8.0, 3000);
  const auto one = discrete_cheeger_intervals(line, 1);
  const auto two = discrete_cheeger_intervals(line, 2);
  // merging two intervals through the mediant inequality shows a pair cannot
  // undercut the best single interval for this weight profile
  CHECK(two.quotient == one.quotient);
  CHECK(two.intervals.size() == 1);
  CHECK(two.intervals[0].face_lo == one.intervals[0].face_lo);
  CHECK(two.intervals[0].face_hi == one.intervals[0].face_hi);
}

TEST_CASE("flat weights pick the whole line", "[oracle]") {
  const double L = 5.0;
  const auto line = DiscreteLine::build(flat_space(10.0), L, 600);
  const auto cut = discrete_cheeger_intervals(line, 2);
  REQUIRE(cut.intervals.size() == 1);
  CHECK(cut.intervals[0].face_lo == 0);
  CHECK(cut.intervals[0].face_hi == line.cells);
  CHECK(std::abs(cut.quotient - 1.0 / L) < 1e-12);
}

TEST_CASE("thread count does not change the answer", "[oracle]") {
  const auto m = WarpedProduct::fuchsian(2);
  const auto line = DiscreteLine::build(m, 6.0, 2000);
  const auto serial = discrete_cheeger_intervals(line, 1, 1);
  const auto threaded = discrete_cheeger_intervals(line, 1, 3);
  CHECK(serial.quotient == threaded.quotient);
  CHECK(serial.intervals[0].face_lo == threaded.intervals[0].face_lo);
  CHECK(serial.intervals[0].face_hi == threaded.intervals[0].face_hi);
}

TEST_CASE("component count validation", "[oracle]") {
  const auto m = WarpedProduct::fuchsian(2);
  const auto line = DiscreteLine::build(m, 3.0, 100);
  CHECK_THROWS_AS(discrete_cheeger_intervals(line, 0), domain_error);
  CHECK_THROWS_AS(discrete_cheeger_intervals(line, 3), domain_error);
}

TEST_CASE("stencil cross-check of the radial operator", "[oracle]") {
  const auto m = WarpedProduct::fuchsian(2);
  const auto grid = uniform_grid(-5.0, 5.0, 101);

  CHECK(fd_operator_check(m, RadialFunction::r_tanh_r(), grid, 1e-4) < 1e-6);
  CHECK(fd_operator_check(m, RadialFunction::sech_r(), grid, 1e-4) < 1e-6);

  // truncation scales with h^2: two decades of h gives four decades of error,
  // so one decade gives a factor near 100
  const double coarse = fd_operator_check(m, RadialFunction::sinh_r(), grid, 1e-2);
  const double fine = fd_operator_check(m, RadialFunction::sinh_r(), grid, 1e-3);
  REQUIRE(fine > 0.0);
  const double ratio = coarse / fine;
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);

  CHECK_THROWS_AS(fd_operator_check(m, RadialFunction::sinh_r(), grid, 1e-7),
                  domain_error);
  CHECK_THROWS_AS(fd_operator_check(m, RadialFunction::sinh_r(), grid, 2e-2),
                  domain_error);
  CHECK_THROWS_AS(fd_operator_check(m, RadialFunction::sinh_r(), {}, 1e-4),
                  domain_error);
}
