#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "warpiso/bounds.hpp"

using namespace warpiso;

namespace {
ModelGeometry make_model(std::vector<int> genera, double core, double outermost) {
  return ModelGeometry(EndData::from_genera(std::move(genera)), core, outermost);
}
}  // namespace

TEST_CASE("model region realizes the isoperimetric value", "[bounds]") {
  const auto r = cheeger_region(2);
  CHECK(std::abs(r.volume - testref::kSlabVolumeAlphaG2) < 1e-10);
  CHECK(std::abs(r.boundary_area - testref::kSlabBoundaryAlphaG2) < 1e-10);
  CHECK(std::abs(r.quotient - testref::kTwoOverAlpha) < 1e-13);

  const auto r3 = cheeger_region(3);
  CHECK(std::abs(r3.volume - 2.0 * r.volume) < 1e-9);
  CHECK(std::abs(r3.quotient - r.quotient) < 1e-15);

  CHECK_THROWS_AS(cheeger_region(1), domain_error);
}

TEST_CASE("pure model saturates the ceiling", "[bounds]") {
  const auto report = main_theorem_bound(make_model({2}, 0.0, 0.0));
  CHECK(std::abs(report.bound - testref::kTwoOverAlpha) < 1e-12);
  CHECK(std::abs(report.h_fuchsian - testref::kTwoOverAlpha) < 1e-13);
  CHECK(report.case_taken == BoundCase::ProfileCase);
  CHECK(report.equality_possible);
  CHECK(std::abs(report.t_optimal - testref::kAlpha) < 1e-12);
  CHECK(report.core_bound == 0.0);

  // the same optimal width the slab search finds
  const auto slab = optimal_slab(WarpedProduct::fuchsian(2));
  CHECK(std::abs(report.t_optimal - slab.alpha) < 1e-9);
  CHECK(std::abs(report.crossing_volume -
                 testref::kFourPi * 0.5 *
                     (testref::kAlpha + std::sinh(testref::kAlpha) *
                                            std::cosh(testref::kAlpha))) < 1e-10);
}

TEST_CASE("large outermost volume flips to the core candidate", "[bounds]") {
  // genus-2 end, no geodesic core, outermost volume 100
  const auto report = main_theorem_bound(make_model({2}, 0.0, 100.0));
  CHECK(report.case_taken == BoundCase::CoreDominates);
  CHECK(std::abs(report.bound - testref::kCoreBoundExample) <
        1e-9 * testref::kCoreBoundExample);
  CHECK(std::abs(report.bound - 0.4118) < 1e-3);
  CHECK_FALSE(report.equality_possible);
  CHECK(report.core_bound < report.profile_bound);
  CHECK(report.bound == report.core_bound);
}

TEST_CASE("profile candidate with a thick core", "[bounds]") {
  // genera {2,2}, core volume 1, outermost 1.5: the constrained profile wins
  const auto report = main_theorem_bound(make_model({2, 2}, 1.0, 1.5));
  CHECK(report.case_taken == BoundCase::ProfileCase);
  CHECK(std::abs(report.bound - testref::kProfileBoundTg1Out15) <
        1e-12 * testref::kProfileBoundTg1Out15);
  CHECK(std::abs(report.t_optimal - testref::kProfileTTg1Out15) < 1e-12);
  CHECK_FALSE(report.equality_possible);

  // brute-force check: no depth does better than the reported optimum
  const double s_tot = 2.0 * testref::kFourPi;
  const double c = 1.0 / s_tot;
  double best = std::numeric_limits<double>::infinity();
  for (double t = 0.05; t <= 6.0; t += 1e-4) {
    const double ch = std::cosh(t);
    const double q = ch * ch / (0.5 * (t + std::sinh(t) * ch) + c);
    best = std::min(best, q);
  }
  CHECK(report.bound <= best + 1e-7);
  CHECK(report.bound >= best - 1e-7);
}

TEST_CASE("constraint lifts the depth when the outermost region is wide",
          "[bounds]") {
  // shift = outermost - core large: t must grow so the slab engulfs it,
  // yet the core candidate eventually undercuts the lifted profile
  const auto m = make_model({2}, 0.0, 40.0);
  const auto report = main_theorem_bound(m);
  const double s = testref::kFourPi;
  const double t_needed = report.t_optimal;
  CHECK(s * 0.5 * (t_needed + std::sinh(t_needed) * std::cosh(t_needed)) >=
        40.0 * (1.0 - 1e-12));
  CHECK(t_needed > testref::kAlpha);
  CHECK(report.bound <= report.profile_bound);
}

TEST_CASE("every admissible model sits below the ceiling", "[bounds]") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> core_d(0.0, 50.0);
  std::uniform_real_distribution<double> extra_d(0.0, 50.0);
  std::uniform_int_distribution<int> genus_d(2, 9);
  std::uniform_int_distribution<int> ends_d(1, 4);

  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> genera;
    const int ends = ends_d(rng);
    for (int k = 0; k < ends; ++k) genera.push_back(genus_d(rng));
    const double core = core_d(rng);
    const auto report = main_theorem_bound(make_model(genera, core, core + extra_d(rng)));
    CHECK(report.bound <= testref::kTwoOverAlpha + 1e-12);
    CHECK(report.bound > 0.0);
  }
}

TEST_CASE("equality flag requires a bare model", "[bounds]") {
  CHECK(main_theorem_bound(make_model({3}, 0.0, 0.0)).equality_possible);
  CHECK_FALSE(main_theorem_bound(make_model({3}, 0.5, 0.5)).equality_possible);
  CHECK_FALSE(main_theorem_bound(make_model({3}, 0.0, 0.5)).equality_possible);

  // outermost volume alone dents nothing: the profile branch still returns
  // the ceiling value, only the rigidity flag is withdrawn
  const auto report = main_theorem_bound(make_model({3}, 0.0, 0.5));
  CHECK(report.case_taken == BoundCase::ProfileCase);
  CHECK(std::abs(report.bound - testref::kTwoOverAlpha) < 1e-14);

  // a genuine core volume strictly lowers the profile branch
  const auto dented = main_theorem_bound(make_model({3}, 0.5, 0.5));
  CHECK(dented.bound < testref::kTwoOverAlpha - 1e-4);
}

TEST_CASE("outermost-region quotient bound", "[bounds]") {
  CHECK(std::abs(core_quotient_bound(2.0 * testref::kFourPi, {2}) - 1.0) < 1e-14);
  CHECK(std::abs(core_quotient_bound(1000.0, {2}) - 2.0 * testref::kFourPi / 1000.0) <
        1e-16);
  CHECK(std::abs(core_quotient_bound(10.0, {2, 3}) - 2.0 * 3.0 * testref::kFourPi / 10.0) <
        1e-12);
  CHECK_THROWS_AS(core_quotient_bound(0.0, {2}), domain_error);
  CHECK_THROWS_AS(core_quotient_bound(-5.0, {2}), domain_error);
  CHECK_THROWS_AS(core_quotient_bound(10.0, {1}), domain_error);
  CHECK_THROWS_AS(core_quotient_bound(10.0, {}), domain_error);
}

TEST_CASE("crossing volume separates the two regimes", "[bounds]") {
  // outermost volume exactly at the crossing: both candidates agree there
  const auto bare = main_theorem_bound(make_model({2}, 0.0, 0.0));
  const double crossing = bare.crossing_volume;

  const auto at = main_theorem_bound(make_model({2}, 0.0, crossing));
  CHECK(std::abs(at.core_bound - testref::kTwoOverAlpha) < 1e-10);

  const auto beyond = main_theorem_bound(make_model({2}, 0.0, 2.0 * crossing));
  CHECK(beyond.case_taken == BoundCase::CoreDominates);
  CHECK(beyond.bound < testref::kTwoOverAlpha);

  const auto inside = main_theorem_bound(make_model({2}, 0.0, 0.5 * crossing));
  CHECK(inside.bound <= testref::kTwoOverAlpha + 1e-14);
}
