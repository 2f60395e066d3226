#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/roots.hpp"
#include "warpiso/warp.hpp"

namespace warpiso {

// Collection of ends; each end carries a closed hyperbolic cross-section of
// genus g >= 2 and cross-sectional area 4 pi (g - 1).
struct EndData {
  std::vector<int> genera;
  std::vector<double> areas;

  static EndData from_genera(std::vector<int> genera) {
    if (genera.empty()) throw domain_error("model needs at least one end");
    EndData e;
    for (int g : genera) {
      if (g < 2) throw domain_error("end cross-sections need genus >= 2");
      e.areas.push_back(4.0 * kPi * (g - 1));
    }
    e.genera = std::move(genera);
    return e;
  }

  double total_area() const {
    double s = 0.0;
    for (double a : areas) s += a;
    return s;
  }
};

// Comparison model: a core of volume tg_core_volume bounded by totally
// geodesic cross-sections, inside an outermost region of volume
// outermost_volume >= tg_core_volume, with product ends beyond.
struct ModelGeometry {
  EndData ends;
  double tg_core_volume = 0.0;
  double outermost_volume = 0.0;

  ModelGeometry(EndData e, double tg_core, double outermost)
      : ends(std::move(e)), tg_core_volume(tg_core), outermost_volume(outermost) {
    if (!(tg_core_volume >= 0.0) || !std::isfinite(tg_core_volume)) {
      throw domain_error("core volume must be finite and >= 0");
    }
    if (!(outermost_volume >= tg_core_volume) || !std::isfinite(outermost_volume)) {
      throw domain_error("outermost volume must be finite and >= core volume");
    }
  }
};

namespace detail {

// antiderivative of cosh^2: I(t) = (t + sinh t cosh t) / 2
inline double cosh_sq_integral(double t) {
  return 0.5 * (t + std::sinh(t) * std::cosh(t));
}

// inverse of I on [0, inf)
inline double cosh_sq_integral_inverse(double y) {
  if (y < 0.0) throw domain_error("volume parameter must be >= 0");
  if (y == 0.0) return 0.0;
  double hi = 1.0;
  while (cosh_sq_integral(hi) < y) {
    hi *= 2.0;
    if (hi > 1e6) throw numeric_error("profile parameter out of range");
  }
  const auto root = brent_root([y](double t) { return cosh_sq_integral(t) - y; }, 0.0,
                               hi, 1e-15);
  double t = root.x;
  for (int k = 0; k < 2; ++k) {  // Newton polish: I'(t) = cosh^2 t
    const double c = std::cosh(t);
    t -= (cosh_sq_integral(t) - y) / (c * c);
  }
  return t;
}

}  // namespace detail

// Area of the model comparison profile at volume V beyond the geodesic core:
// every end pushed to the common depth t with total volume V.
inline double tg_profile(const ModelGeometry& model, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw domain_error("profile volume must be >= 0");
  const double s = model.ends.total_area();
  const double t = detail::cosh_sq_integral_inverse(v / s);
  const double c = std::cosh(t);
  return s * c * c;
}

// Common depth parameter behind tg_profile, exposed for diagnostics.
inline double tg_parameter(const ModelGeometry& model, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw domain_error("profile volume must be >= 0");
  return detail::cosh_sq_integral_inverse(v / model.ends.total_area());
}

// Boundary-area-to-volume ratio of the region swept out to distance t from
// the core.  Written through the deficit
//   2 - ratio = (2 c + t - (1 + e^{-2t}) / 2) / (c + I(t)),  c = core/area,
// which stays accurate where the naive quotient rounds to 2.
inline double equidistant_ratio(const ModelGeometry& model, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw domain_error("depth t must be >= 0");
  const double s = model.ends.total_area();
  const double c = model.tg_core_volume / s;
  if (t == 0.0 && c == 0.0) {
    throw domain_error("equidistant region at t = 0 with empty core has zero volume");
  }
  const double w = c + detail::cosh_sq_integral(t);
  const double deficit = 2.0 * c + t - 0.5 * (1.0 + std::exp(-2.0 * t));
  return 2.0 - deficit / w;
}

// 2 - equidistant_ratio, computed directly; positive exactly when the ratio
// sits below the asymptotic value 2.
inline double equidistant_deficit(const ModelGeometry& model, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw domain_error("depth t must be >= 0");
  const double s = model.ends.total_area();
  const double c = model.tg_core_volume / s;
  if (t == 0.0 && c == 0.0) {
    throw domain_error("equidistant region at t = 0 with empty core has zero volume");
  }
  const double w = c + detail::cosh_sq_integral(t);
  return (2.0 * c + t - 0.5 * (1.0 + std::exp(-2.0 * t))) / w;
}

struct FoliationPoint {
  double area = 0.0;
  double depth = 0.0;  // half-width of the symmetric slab holding volume V
  double slope = 0.0;  // dA/dV = 2 H(depth)
};

// Profile of the symmetric slab foliation on a warped product: the slab
// [-t, t] holding volume V, its boundary area and the growth rate dA/dV.
inline FoliationPoint foliation_profile_beta(const WarpedProduct& m, double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw domain_error("foliation volume must be >= 0");
  const double s = m.base().area();
  FoliationPoint p;
  if (v == 0.0) {
    p.area = 2.0 * s * m.warp()(0.0) * m.warp()(0.0);
    return p;
  }
  const double target = v / (2.0 * s);
  double hi = 1.0;
  while (m.warp().integral_sq(0.0, hi) < target) {
    hi *= 2.0;
    if (hi > 1e6) throw numeric_error("foliation depth out of range");
  }
  const auto root = brent_root(
      [&m, target](double t) { return m.warp().integral_sq(0.0, t) - target; }, 0.0, hi,
      1e-15);
  p.depth = root.x;
  const double f = m.warp()(p.depth);
  p.area = 2.0 * s * f * f;
  p.slope = 2.0 * m.slice_mean_curvature(p.depth);
  return p;
}

enum class ProfileKind { TotallyGeodesic, Foliation, External };

struct ProfileCurve {
  ProfileKind kind = ProfileKind::External;
  std::vector<std::pair<double, double>> samples;  // (V, A), V strictly increasing

  void validate() const {
    if (samples.size() < 2) throw domain_error("profile curve needs at least 2 samples");
    for (size_t i = 0; i < samples.size(); ++i) {
      const auto& [v, a] = samples[i];
      if (!std::isfinite(v) || !std::isfinite(a) || v < 0.0 || !(a > 0.0)) {
        throw domain_error("profile sample " + std::to_string(i) +
                           " is not a finite (V >= 0, A > 0) pair");
      }
      if (i > 0) {
        if (!(v > samples[i - 1].first)) {
          throw domain_error("profile volumes must increase strictly; sample " +
                             std::to_string(i) + " does not");
        }
        if (!(a > samples[i - 1].second)) {
          throw domain_error("profile areas must increase strictly; sample " +
                             std::to_string(i) + " does not");
        }
      }
    }
  }
};

inline ProfileCurve sample_tg_profile(const ModelGeometry& model, double v_max,
                                      int count) {
  if (!(v_max > 0.0) || count < 2) {
    throw domain_error("profile sampling needs v_max > 0 and count >= 2");
  }
  ProfileCurve c;
  c.kind = ProfileKind::TotallyGeodesic;
  for (int k = 0; k <= count; ++k) {
    const double v = v_max * k / count;
    c.samples.emplace_back(v, tg_profile(model, v));
  }
  c.validate();
  return c;
}

inline ProfileCurve sample_foliation_beta(const WarpedProduct& m, double v_max,
                                          int count) {
  if (!(v_max > 0.0) || count < 2) {
    throw domain_error("profile sampling needs v_max > 0 and count >= 2");
  }
  ProfileCurve c;
  c.kind = ProfileKind::Foliation;
  for (int k = 0; k <= count; ++k) {
    const double v = v_max * k / count;
    c.samples.emplace_back(v, foliation_profile_beta(m, v).area);
  }
  c.validate();
  return c;
}

struct ProfileComparison {
  struct Sample {
    double v = 0.0;
    double area = 0.0;
    double bound = 0.0;
    bool violates = false;
    bool equality = false;
  };
  std::vector<Sample> samples;
  int violations = 0;
  int equality_count = 0;
  bool all_within = false;
};

// Checks an external profile against the model comparison bound
//   I(V) <= A_model(V + outermost - core),
// flagging violations and near-equality (relative 1e-9) per sample.
inline ProfileComparison compare_profiles(const ProfileCurve& external,
                                          const ModelGeometry& model) {
  external.validate();
  const double shift = model.outermost_volume - model.tg_core_volume;
  ProfileComparison out;
  for (const auto& [v, a] : external.samples) {
    ProfileComparison::Sample s;
    s.v = v;
    s.area = a;
    s.bound = tg_profile(model, v + shift);
    s.equality = std::abs(a - s.bound) <= 1e-9 * std::max(1.0, std::abs(s.bound));
    s.violates = !s.equality && a > s.bound;
    out.violations += s.violates ? 1 : 0;
    out.equality_count += s.equality ? 1 : 0;
    out.samples.push_back(s);
  }
  out.all_within = out.violations == 0;
  return out;
}

struct RenVolEstimate {
  double value = 0.0;           // outermost volume + half the asymptotic gap
  double tail_gap_mean = 0.0;   // mean of model - external over the tail window
  double tail_gap_slope = 0.0;  // least-squares slope of the gap over the tail
  double window_lo = 0.0;       // smallest V included in the tail
  int tail_count = 0;
};

// Renormalized-volume style invariant: outermost volume plus half the
// limiting gap between the model profile and the external profile.  The tail
// window is the last decade of sampled volumes; the estimate is rejected if
// the gap has not stabilized there.
inline RenVolEstimate renvol_estimate(const ProfileCurve& external,
                                      const ModelGeometry& model) {
  external.validate();
  const double v_max = external.samples.back().first;
  const double v_lo = v_max / 10.0;
  std::vector<std::pair<double, double>> tail;  // (V, gap)
  for (const auto& [v, a] : external.samples) {
    if (v >= v_lo) tail.emplace_back(v, tg_profile(model, v) - a);
  }
  if (tail.size() < 3) {
    throw numeric_error("insufficient profile range: need >= 3 samples in the last "
                        "decade of volumes, have " + std::to_string(tail.size()));
  }
  double mv = 0.0, mg = 0.0;
  for (const auto& [v, g] : tail) {
    mv += v;
    mg += g;
  }
  mv /= tail.size();
  mg /= tail.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [v, g] : tail) {
    sxx += (v - mv) * (v - mv);
    sxy += (v - mv) * (g - mg);
  }
  RenVolEstimate out;
  out.tail_gap_mean = mg;
  out.tail_gap_slope = (sxx > 0.0) ? sxy / sxx : 0.0;
  out.window_lo = v_lo;
  out.tail_count = static_cast<int>(tail.size());
  if (std::abs(out.tail_gap_slope) > 1e-6) {
    throw numeric_error("profile gap has not stabilized: tail slope " +
                        std::to_string(out.tail_gap_slope) + " exceeds 1e-6");
  }
  out.value = model.outermost_volume + 0.5 * mg;
  return out;
}

}  // namespace warpiso
