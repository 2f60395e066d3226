#pragma once

#include <cmath>

#include "warpiso/errors.hpp"
#include "warpiso/warp.hpp"

namespace warpiso {

// Curvature data of dr^2 + f^2 g_base at radius r.  With K the base curvature:
//   Ric(d/dr, d/dr)      = -2 f''/f
//   Ric(e_j, e_j)        = -f''/f + (K - f'^2)/f^2   (unit tangential e_j)
//   scalar               = -4 f''/f + 2 (K - f'^2)/f^2
struct CurvatureReport {
  double at_r = 0.0;
  double ric_radial = 0.0;
  double ric_tangential = 0.0;
  double scalar = 0.0;
};

inline CurvatureReport curvature_at(const WarpedProduct& m, double r) {
  const double f = m.warp()(r);
  if (!(f > 0.0)) throw domain_error("warp must be positive to evaluate curvature");
  const double df = m.warp().deriv1(r);
  const double d2f = m.warp().deriv2(r);
  const double K = m.base().curvature();
  CurvatureReport out;
  out.at_r = r;
  out.ric_radial = -2.0 * d2f / f;
  out.ric_tangential = -d2f / f + (K - df * df) / (f * f);
  out.scalar = out.ric_radial + 2.0 * out.ric_tangential;
  return out;
}

// Second-fundamental-form data of the slice {r = const}.  Slices are umbilic,
// so the traceless part vanishes identically.
struct SliceShape {
  double mean_curvature = 0.0;   // H = f'/f
  double second_form_norm2 = 0;  // |A|^2 = 2 H^2
  double traceless_norm2 = 0.0;  // always 0 for warped slices
  double intrinsic_curvature = 0.0;  // K / f^2

  static SliceShape at(const WarpedProduct& m, double r) {
    SliceShape s;
    s.mean_curvature = m.slice_mean_curvature(r);
    s.second_form_norm2 = 2.0 * s.mean_curvature * s.mean_curvature;
    s.traceless_norm2 = 0.0;
    const double f = m.warp()(r);
    s.intrinsic_curvature = m.base().curvature() / (f * f);
    return s;
  }
};

// (1 - H^2) * |slice| for a hyperbolic base; equals base area times the
// metric gap f^2 - f'^2, which the warp evaluates without cancellation.
inline double gauss_bonnet_energy(const WarpedProduct& m, double r) {
  if (m.base().curvature() != -1.0) {
    throw domain_error("energy bound requires a hyperbolic base (K = -1)");
  }
  return m.base().area() * m.warp().metric_gap(r);
}

// Integrand (2 - |A|^2 - Ric(N,N) - ... ) collapsed for umbilic slices over a
// hyperbolic base: 2 (1 - H^2) |slice| = 2 * area * (f^2 - f'^2).
inline double stability_integrand(const WarpedProduct& m, double r) {
  if (m.base().curvature() != -1.0) {
    throw domain_error("stability integrand requires a hyperbolic base (K = -1)");
  }
  return 2.0 * m.base().area() * m.warp().metric_gap(r);
}

// Checks (1 - H^2) * area <= 4 pi (2 genus - 2) for a closed slice of the
// given genus >= 2.
inline bool energy_lower_bound_check(double mean_curvature, double slice_area,
                                     int genus) {
  if (genus < 2) throw domain_error("energy bound check needs genus >= 2");
  if (!(slice_area > 0.0)) throw domain_error("slice area must be positive");
  const double lhs = (1.0 - mean_curvature * mean_curvature) * slice_area;
  return lhs <= 4.0 * kPi * (2.0 * genus - 2.0) * (1.0 + 1e-12) + 1e-12;
}

// Conformal radial coordinate F(r) = 2 arctan(tanh(r/2)): odd, strictly
// increasing, F'(r) = sech r, with range (-pi/2, pi/2).
inline double conformal_coordinate(double r) {
  return 2.0 * std::atan(std::tanh(0.5 * r));
}

// Ratio (scalar + 6) / (F(r) - pi/2)^2 for the spherical-base cosh warp,
// where F(r) = 2 arctan(tanh r).  Both factors vanish as r -> +infinity;
// the quotient grows without bound, which is what this probe certifies.
// Stable forms: scalar + 6 = 4 sech^2 r and pi/2 - F(r) = 2 arctan(e^{-2r}).
inline double blowup_ratio(const WarpedProduct& m, double r) {
  if (m.base().curvature() != 1.0) {
    throw domain_error("blowup ratio is defined for the spherical base (K = +1)");
  }
  if (m.warp().family() != WarpFamily::Cosh) {
    throw domain_error("blowup ratio is defined for the cosh warp");
  }
  const double sech = 1.0 / std::cosh(r);
  const double numer = 4.0 * sech * sech;
  const double gap = 2.0 * std::atan(std::exp(-2.0 * r));  // pi/2 - 2 atan(tanh r)
  return numer / (gap * gap);
}

}  // namespace warpiso
