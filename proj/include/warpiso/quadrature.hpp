#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "warpiso/errors.hpp"

namespace warpiso {

struct QuadratureOptions {
  double rel_tol = 1e-10;   // relative to the magnitude of the whole integral
  double abs_tol = 1e-14;   // floor for integrals that are themselves tiny
  int max_depth = 48;
};

namespace detail {

inline std::string format_interval(double a, double b) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "[%.6g, %.6g]", a, b);
  return buf;
}

// One level of adaptive Simpson.  `whole` is the Simpson estimate on [a, b];
// the two half-interval estimates either accept it (with the 1/15 Richardson
// correction) or recurse with a halved budget.
template <class F>
double simpson_step(const F& f, double a, double m, double b, double fa, double fm,
                    double fb, double whole, double eps, double abs_floor, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * std::max(eps, abs_floor)) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw numeric_error("adaptive quadrature failed to converge on " +
                        format_interval(a, b) + ": residual " +
                        std::to_string(std::abs(delta) / 15.0) +
                        " exceeds tolerance after exhausting subdivision depth");
  }
  return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * eps, abs_floor, depth - 1) +
         simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * eps, abs_floor, depth - 1);
}

}  // namespace detail

// Adaptive Simpson integration of f over [a, b].  Interval orientation is
// respected: integrate(f, b, a) == -integrate(f, a, b).
template <class F>
double integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw domain_error("quadrature endpoints must be finite");
  }
  if (a == b) return 0.0;
  if (a > b) return -integrate(std::forward<F>(f), b, a, opt);

  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double eps = opt.rel_tol * std::abs(whole);
  return detail::simpson_step(f, a, m, b, fa, fm, fb, whole, eps, opt.abs_tol,
                              opt.max_depth);
}

}  // namespace warpiso
