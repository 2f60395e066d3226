#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "warpiso/cheeger.hpp"
#include "warpiso/errors.hpp"
#include "warpiso/profiles.hpp"
#include "warpiso/roots.hpp"

namespace warpiso {

// Optimal symmetric slab over a genus-g cross-section: the region realizing
// the model isoperimetric constant 2/alpha.
struct CheegerRegion {
  double volume = 0.0;
  double boundary_area = 0.0;
  double quotient = 0.0;
};

inline CheegerRegion cheeger_region(int genus) {
  if (genus < 2) throw domain_error("model region needs genus >= 2");
  const double alpha = fuchsian_alpha();
  const double s = 4.0 * kPi * (genus - 1);
  CheegerRegion r;
  r.volume = 2.0 * s * detail::cosh_sq_integral(alpha);
  const double c = std::cosh(alpha);
  r.boundary_area = 2.0 * s * c * c;
  r.quotient = r.boundary_area / r.volume;
  return r;
}

// Boundary-to-volume bound for a region of the given volume whose boundary
// consists of one cross-section per end, each of area < 8 pi (g - 1).
inline double core_quotient_bound(double volume, const std::vector<int>& genera) {
  if (!(volume > 0.0)) throw domain_error("core bound needs volume > 0");
  const EndData ends = EndData::from_genera(genera);
  return 2.0 * ends.total_area() / volume;
}

enum class BoundCase { CoreDominates, ProfileCase };

struct BoundsReport {
  double bound = 0.0;
  BoundCase case_taken = BoundCase::ProfileCase;
  bool equality_possible = false;
  double h_fuchsian = 0.0;       // 2 / alpha, the ceiling every model obeys
  double profile_bound = 0.0;    // best slab-through-the-ends candidate
  double core_bound = 0.0;       // outermost-region candidate (0 if inapplicable)
  double t_optimal = 0.0;        // depth realizing profile_bound
  double crossing_volume = 0.0;  // half the total optimal-slab volume
};

namespace bounds_detail {

// Stationarity of q(t) = cosh^2 t / (I(t) + c), scaled to O(1):
//   s(t) = 2 sinh t (I(t) + c) / cosh^3 t - 1.
inline double profile_stationarity(double t, double c) {
  const double ch = std::cosh(t);
  return 2.0 * std::sinh(t) * (detail::cosh_sq_integral(t) + c) / (ch * ch * ch) - 1.0;
}

}  // namespace bounds_detail

// Isoperimetric-constant upper bound for a manifold matching the model:
// sweeps the family of regions "outermost region + ends to depth t" and the
// crude outermost-only candidate, returning the better of the two.
inline BoundsReport main_theorem_bound(const ModelGeometry& model) {
  const double s_tot = model.ends.total_area();
  const double c = model.tg_core_volume / s_tot;
  const double shift = model.outermost_volume - model.tg_core_volume;
  const double alpha = fuchsian_alpha();

  BoundsReport report;
  report.h_fuchsian = 2.0 / alpha;
  report.crossing_volume = s_tot * detail::cosh_sq_integral(alpha);
  report.equality_possible =
      model.tg_core_volume == 0.0 && model.outermost_volume == 0.0;

  // Unconstrained stationary depth of the profile candidate.  The scaled
  // stationarity equals sech^2(t) ((t + 2c) tanh t - 1), so it has exactly one
  // sign change; with a thick core it sits below the default scan start and
  // the bracket must be walked down before it is grown.
  const auto stat = [c](double t) { return bounds_detail::profile_stationarity(t, c); };
  double lo = 0.25, hi = 0.5;
  for (int k = 0; k < 1100 && stat(lo) > 0.0; ++k) lo *= 0.5;
  for (int k = 0; k < 60 && stat(hi) < 0.0; ++k) hi *= 2.0;
  if (!(stat(lo) <= 0.0) || !(stat(hi) >= 0.0)) {
    throw numeric_error("profile-candidate stationarity could not be bracketed");
  }
  const auto root = brent_root(stat, lo, hi, 1e-15);
  if (!root.converged) {
    throw numeric_error("profile-candidate stationarity solve did not converge");
  }
  double t_opt = root.x;

  // The candidate must engulf the outermost region: s_tot I(t) >= shift.
  const double need = shift / s_tot;
  if (detail::cosh_sq_integral(t_opt) < need) {
    t_opt = detail::cosh_sq_integral_inverse(need);
  }
  const double ch = std::cosh(t_opt);
  report.t_optimal = t_opt;
  report.profile_bound = ch * ch / (detail::cosh_sq_integral(t_opt) + c);

  report.bound = report.profile_bound;
  report.case_taken = BoundCase::ProfileCase;
  if (model.outermost_volume > 0.0) {
    const double calpha = std::cosh(alpha);
    report.core_bound = s_tot * calpha * calpha / model.outermost_volume;
    if (report.core_bound < report.bound) {
      report.bound = report.core_bound;
      report.case_taken = BoundCase::CoreDominates;
    }
  }
  return report;
}

}  // namespace warpiso
