#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/roots.hpp"
#include "warpiso/warp.hpp"

namespace warpiso {

// Function of the radial coordinate with its first two derivatives.
class RadialFunction {
 public:
  using Evaluator = std::function<double(double)>;

  RadialFunction(std::string name, Evaluator u, Evaluator du, Evaluator d2u)
      : name_(std::move(name)), u_(std::move(u)), du_(std::move(du)), d2u_(std::move(d2u)) {
    if (!u_ || !du_ || !d2u_) throw domain_error("radial function needs u, u' and u''");
  }

  double operator()(double r) const { return u_(r); }
  double deriv1(double r) const { return du_(r); }
  double deriv2(double r) const { return d2u_(r); }
  const std::string& name() const { return name_; }

  static RadialFunction coordinate() {
    return RadialFunction("r", [](double r) { return r; }, [](double) { return 1.0; },
                          [](double) { return 0.0; });
  }
  static RadialFunction sinh_r() {
    return RadialFunction("sinh", [](double r) { return std::sinh(r); },
                          [](double r) { return std::cosh(r); },
                          [](double r) { return std::sinh(r); });
  }
  static RadialFunction tanh_r() {
    return RadialFunction("tanh", [](double r) { return std::tanh(r); },
                          [](double r) {
                            const double s = 1.0 / std::cosh(r);
                            return s * s;
                          },
                          [](double r) {
                            const double s = 1.0 / std::cosh(r);
                            return -2.0 * s * s * std::tanh(r);
                          });
  }
  static RadialFunction sech_r() {
    return RadialFunction("sech", [](double r) { return 1.0 / std::cosh(r); },
                          [](double r) { return -std::tanh(r) / std::cosh(r); },
                          [](double r) {
                            const double s = 1.0 / std::cosh(r);
                            const double t = std::tanh(r);
                            return s * (t * t - s * s);
                          });
  }
  static RadialFunction r_tanh_r() {
    return RadialFunction("r*tanh", [](double r) { return r * std::tanh(r); },
                          [](double r) {
                            const double s = 1.0 / std::cosh(r);
                            return std::tanh(r) + r * s * s;
                          },
                          [](double r) {
                            const double s = 1.0 / std::cosh(r);
                            return 2.0 * s * s * (1.0 - r * std::tanh(r));
                          });
  }
  static RadialFunction constant(double c) {
    return RadialFunction("const", [c](double) { return c; }, [](double) { return 0.0; },
                          [](double) { return 0.0; });
  }

  // Derivatives by central differences of `u` alone; this is the independent
  // route used to cross-check analytic evaluator triples.
  static RadialFunction from_samples_of(std::string name, Evaluator u, double h) {
    if (!(h > 0.0)) throw domain_error("finite-difference step must be positive");
    Evaluator du = [u, h](double r) { return (u(r + h) - u(r - h)) / (2.0 * h); };
    Evaluator d2u = [u, h](double r) {
      return (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
    };
    return RadialFunction(std::move(name), u, std::move(du), std::move(d2u));
  }

 private:
  std::string name_;
  Evaluator u_, du_, d2u_;
};

// Laplacian of a radial function on the warped product:
//   (Delta u)(r) = u''(r) + 2 (f'(r) / f(r)) u'(r).
inline double radial_laplacian(const WarpedProduct& m, const RadialFunction& u, double r) {
  return u.deriv2(r) + 2.0 * m.slice_mean_curvature(r) * u.deriv1(r);
}

inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo < hi)) throw domain_error("grid needs n >= 2 and lo < hi");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

struct IdentityCheck {
  std::string identity;
  double max_residual = 0.0;
  double worst_r = 0.0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double tol = 0.0;
  bool all_pass = false;

  std::string summary() const {
    std::string out;
    char buf[160];
    for (const auto& c : checks) {
      std::snprintf(buf, sizeof(buf), "%-24s residual %.3e at r = %+.4f  %s\n",
                    c.identity.c_str(), c.max_residual, c.worst_r,
                    c.pass ? "ok" : "FAIL");
      out += buf;
    }
    return out;
  }
};

enum class DerivativeMode { Analytic, FiniteDifference };

// Checks the Laplacian closed forms that hold for the cosh warp:
//   Delta r = 2 tanh r,  Delta sinh = 3 sinh,  Delta sech = -sech,
//   Delta tanh = 0,      Delta (r tanh r) = 2.
// Residuals are scaled by max(1, |target|).  In FiniteDifference mode the
// derivatives of each test function are replaced by central differences, so
// the identities are confirmed without trusting any analytic derivative.
inline IdentityReport verify_identities(const WarpedProduct& m,
                                        const std::vector<double>& grid, double tol,
                                        DerivativeMode mode = DerivativeMode::Analytic,
                                        double fd_step = 1e-4) {
  if (grid.empty()) throw domain_error("identity check needs a non-empty grid");
  if (!(tol > 0.0)) throw domain_error("identity tolerance must be positive");

  using Target = std::function<double(double)>;
  struct Case {
    RadialFunction u;
    Target rhs;
    std::string label;
  };
  std::vector<Case> cases;
  cases.push_back({RadialFunction::coordinate(),
                   [](double r) { return 2.0 * std::tanh(r); }, "lap(r) = 2 tanh r"});
  cases.push_back({RadialFunction::sinh_r(), [](double r) { return 3.0 * std::sinh(r); },
                   "lap(sinh) = 3 sinh"});
  cases.push_back({RadialFunction::sech_r(),
                   [](double r) { return -1.0 / std::cosh(r); }, "lap(sech) = -sech"});
  cases.push_back(
      {RadialFunction::tanh_r(), [](double) { return 0.0; }, "lap(tanh) = 0"});
  cases.push_back(
      {RadialFunction::r_tanh_r(), [](double) { return 2.0; }, "lap(r tanh r) = 2"});

  IdentityReport report;
  report.tol = tol;
  report.all_pass = true;
  for (auto& c : cases) {
    RadialFunction u = c.u;
    if (mode == DerivativeMode::FiniteDifference) {
      const RadialFunction analytic = c.u;
      u = RadialFunction::from_samples_of(analytic.name(),
                                          [analytic](double r) { return analytic(r); },
                                          fd_step);
    }
    IdentityCheck check;
    check.identity = c.label;
    for (double r : grid) {
      const double lhs = radial_laplacian(m, u, r);
      const double rhs = c.rhs(r);
      const double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      if (res > check.max_residual) {
        check.max_residual = res;
        check.worst_r = r;
      }
    }
    check.pass = check.max_residual <= tol;
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

struct SlabDivergence {
  double lhs = 0.0;          // 2 * volume of the symmetric slab
  double rhs = 0.0;          // boundary flux of the calibration potential
  double calibration = 0.0;  // alpha * boundary area, the calibrated ceiling
  double alpha = 0.0;
  bool equality = false;     // x sits at the optimal half-width
};

// Integrates lap(r tanh r) = 2 over the slab [-x, x] and compares the bulk
// term 2|slab| with the boundary flux; the flux never exceeds alpha times the
// boundary area, with equality exactly at x = alpha.
inline SlabDivergence slab_divergence_check(const WarpedProduct& m, double x) {
  if (!(x > 0.0)) throw domain_error("divergence check needs x > 0");
  SlabDivergence out;
  const auto root = brent_root(
      [](double t) { return t * std::tanh(t) - 1.0; }, 1.0, 1.5, 0.0);
  out.alpha = root.x;
  const double area = m.slice_area(x);
  const double sech = 1.0 / std::cosh(x);
  const double phi_prime = std::tanh(x) + x * sech * sech;
  out.lhs = 2.0 * m.slab_volume(Slab::symmetric(x));
  out.rhs = 2.0 * phi_prime * area;
  out.calibration = out.alpha * 2.0 * area;
  out.equality = std::abs(x - out.alpha) <= 1e-9;
  return out;
}

}  // namespace warpiso
