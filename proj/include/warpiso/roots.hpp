#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "warpiso/errors.hpp"

namespace warpiso {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Scan for a sign change of f starting from x0 > 0, growing the probe point
// geometrically.  If f(x0) and f(2 x0) share a sign the scan keeps doubling;
// should the function look like it never crosses, the scanned window is
// reported in the error message.
template <class F>
Bracket expand_bracket(F&& f, double x0, double growth = 2.0, int max_steps = 60) {
  if (!(x0 > 0.0) || !(growth > 1.0)) {
    throw domain_error("bracket scan needs x0 > 0 and growth > 1");
  }
  double a = x0;
  double fa = f(a);
  if (fa == 0.0) return {a, a};
  double b = a;
  for (int k = 0; k < max_steps; ++k) {
    b *= growth;
    const double fb = f(b);
    if (fb == 0.0) return {b, b};
    if ((fa < 0.0) != (fb < 0.0)) return {a, b};
    a = b;
    fa = fb;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "no sign change found in [%g, %g]", x0, b);
  throw numeric_error(buf);
}

// Brent's method.  Requires f(a) and f(b) to bracket a root.
template <class F>
RootResult brent_root(F&& f, double a, double b, double xtol = 1e-14,
                      int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0, true};
  if (fb == 0.0) return {b, 0.0, 0, true};
  if ((fa < 0.0) == (fb < 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "root not bracketed: f(%.6g) = %.6g and f(%.6g) = %.6g share a sign",
                  a, fa, b, fb);
    throw domain_error(buf);
  }

  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 1; iter <= max_iter; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return {b, fb, iter, true};
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic interpolation, falling back to secant
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb < 0.0) == (fc < 0.0)) {
      c = a; fc = fa;
      d = b - a; e = d;
    }
  }
  return {b, fb, max_iter, false};
}

// Brent's parabolic-interpolation minimizer on [a, b].
template <class F>
RootResult brent_minimize(F&& f, double a, double b, double xtol = 1e-12,
                          int max_iter = 200) {
  if (!(a < b)) throw domain_error("minimizer needs a < b");
  const double gold = 0.3819660112501051;
  const double eps = std::numeric_limits<double>::epsilon();
  double x = a + gold * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = xtol * std::abs(x) + eps * 4.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) {
      return {x, fx, iter, true};
    }
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) && p < q * (b - x)) {
        parabolic = true;
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (xm > x) ? tol1 : -tol1;
      }
    }
    if (!parabolic) {
      e = (x >= xm) ? a - x : b - x;
      d = gold * e;
    }
    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx, max_iter, false};
}

}  // namespace warpiso
