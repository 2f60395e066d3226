#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/quadrature.hpp"
#include "warpiso/roots.hpp"
#include "warpiso/warp.hpp"

namespace warpiso {

// Root of coth(a) = a, the half-width of the optimal symmetric slab for the
// cosh warp.  Solved once to machine precision and cached.
inline double fuchsian_alpha() {
  static const double alpha =
      brent_root([](double x) { return x * std::tanh(x) - 1.0; }, 1.0, 1.5, 0.0).x;
  return alpha;
}

// Isoperimetric quotient |boundary| / |volume| of the symmetric slab of
// half-width x.  The base area cancels; only the warp enters.
inline double slab_quotient(const WarpedProduct& m, double x) {
  if (!(x > 0.0)) throw domain_error("slab quotient needs half-width x > 0");
  const double f = m.warp()(x);
  const double vol = m.warp().integral_sq(0.0, x);
  if (!(vol > 0.0)) throw numeric_error("slab volume is not positive");
  return f * f / vol;
}

struct CalibrationPoint {
  double phi = 0.0;
  double phi_prime = 0.0;
};

// Potential phi solving lap(phi) = 2 with phi(0) = 0:
//   phi'(r) = 2 V(r) / A(r),  V(r) = int_0^r f^2,  A(r) = f(r)^2.
// For the cosh warp this is phi(r) = r tanh r.
inline CalibrationPoint calibration_potential(const WarpedProduct& m, double r) {
  const auto phi_prime = [&m](double t) {
    if (t == 0.0) return 0.0;
    const double f = m.warp()(t);
    return 2.0 * m.warp().integral_sq(0.0, t) / (f * f);
  };
  CalibrationPoint out;
  out.phi_prime = phi_prime(r);
  out.phi = integrate(phi_prime, 0.0, r);
  return out;
}

struct OptimalSlab {
  double alpha = 0.0;     // optimal half-width
  double quotient = 0.0;  // area/volume ratio there
};

namespace detail {

// Scaled stationarity function for the symmetric-slab quotient:
//   s(x) = phi'(x) * H(x) - 1,
// which changes sign exactly where d/dx [A(x)/V(x)] vanishes.  s < 0 near 0
// and the quotient is minimal at the first crossing for the model families.
inline double slab_stationarity(const WarpedProduct& m, double x) {
  const double f = m.warp()(x);
  const double df = m.warp().deriv1(x);
  const double vol = m.warp().integral_sq(0.0, x);
  return 2.0 * vol * df / (f * f * f) - 1.0;
}

}  // namespace detail

// Minimizes the symmetric-slab quotient.  Requires an even warp with f' > 0
// on (0, window).  Stationary points are located by a doubling bracket scan
// plus Brent; candidates failing a second-order (local minimum) probe are
// discarded and the best surviving minimum wins.
inline OptimalSlab optimal_slab(const WarpedProduct& m) {
  const WarpFunction& w = m.warp();
  if (!w.even()) throw domain_error("optimal slab search requires an even warp");
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    if (x < m.window() && !(w.deriv1(x) > 0.0)) {
      throw domain_error(
          "optimal slab search requires f' > 0 on (0, window); fails at x = " +
          std::to_string(x));
    }
  }

  const auto stat = [&m](double x) { return detail::slab_stationarity(m, x); };
  std::vector<double> candidates;
  // s -> -1 as x -> 0, so a start with s > 0 (sharply scaled warps) only
  // needs walking down until the sign flips back.
  double scan_from = 0.25;
  for (int k = 0; k < 600 && stat(scan_from) > 0.0; ++k) scan_from *= 0.5;
  for (int pass = 0; pass < 3 && scan_from < m.window(); ++pass) {
    Bracket br;
    try {
      br = expand_bracket(stat, scan_from);
    } catch (const numeric_error&) {
      break;  // no further sign change reachable
    }
    if (br.lo > m.window()) break;
    const auto root = brent_root(stat, br.lo, br.hi, 1e-15);
    if (!root.converged) {
      throw numeric_error("slab stationarity solve did not converge near x = " +
                          std::to_string(root.x));
    }
    candidates.push_back(root.x);
    scan_from = std::max(root.x * 1.001, br.hi);
  }
  if (candidates.empty()) {
    throw numeric_error("no stationary slab width found scanning from 0.25 within window " +
                        std::to_string(m.window()));
  }

  OptimalSlab best;
  bool found = false;
  for (double x : candidates) {
    const double q = slab_quotient(m, x);
    const double q_lo = slab_quotient(m, x * (1.0 - 1e-3));
    const double q_hi = slab_quotient(m, x * (1.0 + 1e-3));
    if (q_lo > q && q_hi > q) {  // genuine local minimum
      if (!found || q < best.quotient) {
        best.alpha = x;
        best.quotient = q;
        found = true;
      }
    }
  }
  if (!found) {
    throw numeric_error("stationary slab widths found, but none is a local minimum");
  }
  return best;
}

struct LowerBound {
  double bound = 0.0;          // 2 / sup phi'
  double sup_phi_prime = 0.0;  // supremum of the calibration gradient
  double argmax = 0.0;         // radius where the supremum is attained
};

// Calibrated lower bound 2 / sup phi'.  The supremum must be attained in the
// interior of [0, window]; warps whose calibration gradient keeps growing to
// the window edge are not certifiable this way.
inline LowerBound cheeger_lower_bound(const WarpedProduct& m) {
  const double window = m.window();
  const auto phi_prime = [&m](double t) {
    if (t == 0.0) return 0.0;
    const double f = m.warp()(t);
    return 2.0 * m.warp().integral_sq(0.0, t) / (f * f);
  };

  const int n = 4096;
  int best_i = 0;
  double best_v = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = window * i / n;
    const double v = phi_prime(x);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  if (best_i >= n - 1) {
    throw domain_error(
        "non-certifiable warp on this window: sup phi' is attained at the boundary");
  }
  const double lo = window * (best_i - 1) / n;
  const double hi = window * (best_i + 1) / n;
  const auto refined =
      brent_minimize([&phi_prime](double t) { return -phi_prime(t); }, lo, hi, 1e-13);

  LowerBound out;
  out.argmax = refined.x;
  out.sup_phi_prime = -refined.fx;
  // Inflate the supremum by a hair so that 2/sup remains a true lower bound
  // despite floating-point noise in the maximization.
  out.bound = 2.0 / (out.sup_phi_prime * (1.0 + 5e-13));
  return out;
}

struct CheegerCertificate {
  double upper = 0.0;          // best slab quotient (isoperimetric constant <= upper)
  double lower = 0.0;          // calibrated bound    (isoperimetric constant >= lower)
  double alpha = 0.0;          // optimal half-width
  double sup_phi_prime = 0.0;
  double residual = 0.0;       // upper - lower
  bool certified = false;      // residual <= tol
};

// Two-sided certificate for the isoperimetric constant of the warped product.
inline CheegerCertificate certify(const WarpedProduct& m, double tol = 1e-8) {
  if (!(tol > 0.0)) throw domain_error("certificate tolerance must be positive");
  const OptimalSlab slab = optimal_slab(m);
  const LowerBound lb = cheeger_lower_bound(m);
  CheegerCertificate cert;
  cert.upper = slab.quotient;
  cert.lower = std::min(lb.bound, cert.upper);  // keep the ordering exact
  cert.alpha = slab.alpha;
  cert.sup_phi_prime = lb.sup_phi_prime;
  cert.residual = cert.upper - cert.lower;
  cert.certified = cert.residual <= tol;
  return cert;
}

}  // namespace warpiso
