#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "warpiso/errors.hpp"
#include "warpiso/quadrature.hpp"

namespace warpiso {

inline constexpr double kPi = 3.14159265358979323846;

enum class WarpFamily { Cosh, CoshScaled, Custom };

// Warping factor f of a metric dr^2 + f(r)^2 g_base.  Derivative accuracy
// drives every certificate downstream, so a warp is always built from
// closed-form evaluators for f, f' and f''; there is deliberately no
// constructor taking sampled data.
class WarpFunction {
 public:
  using Evaluator = std::function<double(double)>;

  static WarpFunction hyperbolic_cosh() {
    WarpFunction w;
    w.family_ = WarpFamily::Cosh;
    w.name_ = "cosh";
    w.even_ = true;
    w.f_ = [](double r) { return std::cosh(r); };
    w.df_ = [](double r) { return std::sinh(r); };
    w.d2f_ = [](double r) { return std::cosh(r); };
    // antiderivative of cosh^2 and the exact gap cosh^2 - sinh^2 = 1
    w.isq_antideriv_ = [](double t) { return 0.5 * (t + std::sinh(t) * std::cosh(t)); };
    w.metric_gap_ = [](double) { return 1.0; };
    return w;
  }

  // f(r) = cosh(rate * r); radial sectional curvature -rate^2.
  static WarpFunction cosh_scaled(double rate) {
    if (!(rate > 0.0)) throw domain_error("cosh_scaled needs rate > 0");
    WarpFunction w;
    w.family_ = WarpFamily::CoshScaled;
    w.name_ = "cosh_scaled(" + std::to_string(rate) + ")";
    w.even_ = true;
    w.f_ = [rate](double r) { return std::cosh(rate * r); };
    w.df_ = [rate](double r) { return rate * std::sinh(rate * r); };
    w.d2f_ = [rate](double r) { return rate * rate * std::cosh(rate * r); };
    w.isq_antideriv_ = [rate](double t) {
      return 0.5 * (t + std::sinh(rate * t) * std::cosh(rate * t) / rate);
    };
    // cosh^2(ar) - a^2 sinh^2(ar) = 1 + (1 - a^2) sinh^2(ar), cancellation-free
    w.metric_gap_ = [rate](double r) {
      const double s = std::sinh(rate * r);
      return 1.0 + (1.0 - rate * rate) * s * s;
    };
    return w;
  }

  static WarpFunction custom(std::string name, Evaluator f, Evaluator df, Evaluator d2f,
                             bool even) {
    if (!f || !df || !d2f) throw domain_error("custom warp needs f, f' and f''");
    WarpFunction w;
    w.family_ = WarpFamily::Custom;
    w.name_ = std::move(name);
    w.even_ = even;
    w.f_ = std::move(f);
    w.df_ = std::move(df);
    w.d2f_ = std::move(d2f);
    return w;
  }

  double operator()(double r) const { return f_(r); }
  double deriv1(double r) const { return df_(r); }
  double deriv2(double r) const { return d2f_(r); }

  WarpFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  bool even() const { return even_; }
  bool has_closed_form_integral() const { return static_cast<bool>(isq_antideriv_); }

  // integral of f^2 over [a, b]; closed form when the family has one.
  double integral_sq(double a, double b, const QuadratureOptions& opt = {}) const {
    if (isq_antideriv_) return isq_antideriv_(b) - isq_antideriv_(a);
    return integrate([this](double t) { const double v = f_(t); return v * v; }, a, b,
                     opt);
  }

  // f(r)^2 - f'(r)^2.  The naive difference cancels catastrophically for
  // exponentially growing warps, so the built-in families carry stable forms.
  double metric_gap(double r) const {
    if (metric_gap_) return metric_gap_(r);
    const double v = f_(r);
    const double d = df_(r);
    return v * v - d * d;
  }

 private:
  WarpFamily family_ = WarpFamily::Custom;
  std::string name_;
  bool even_ = false;
  Evaluator f_, df_, d2f_;
  Evaluator isq_antideriv_;  // optional: t -> antiderivative of f^2 at t
  Evaluator metric_gap_;     // optional: stable f^2 - f'^2
};

struct WarpConsistency {
  bool positive = false;        // f > 0 across the sampled window
  double max_even_defect = 0;   // max |f(r) - f(-r)| over the samples
  double fd_order = 0;          // observed order of the central-difference error
  double fd_residual = 0;       // |FD(f, h=1e-4) - f'| worst case, scaled
  bool pass(double even_tol = 1e-10, double min_order = 1.9) const {
    return positive && fd_order >= min_order &&
           (max_even_defect <= even_tol);
  }
};

// Cross-checks a warp's evaluator triple: positivity, claimed parity, and a
// two-step central-difference probe that the supplied f' really is the
// derivative of the supplied f.
inline WarpConsistency check_warp(const WarpFunction& w, double window = 25.0,
                                  int samples = 201) {
  if (!(window > 0.0) || samples < 8) {
    throw domain_error("check_warp needs window > 0 and at least 8 samples");
  }
  WarpConsistency out;
  out.positive = true;
  const double h1 = 1e-3, h2 = 1e-4;
  double e1 = 0.0, e2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = -window + 2.0 * window * i / (samples - 1);
    const double fr = w(r);
    if (!(fr > 0.0) || !std::isfinite(fr)) out.positive = false;
    if (w.even()) {
      out.max_even_defect = std::max(out.max_even_defect,
                                     std::abs(fr - w(-r)) / std::max(1.0, std::abs(fr)));
    }
    const double d1 = (w(r + h1) - w(r - h1)) / (2.0 * h1);
    const double d2 = (w(r + h2) - w(r - h2)) / (2.0 * h2);
    e1 = std::max(e1, std::abs(d1 - w.deriv1(r)));
    e2 = std::max(e2, std::abs(d2 - w.deriv1(r)));
  }
  out.fd_residual = e2;
  out.fd_order = (e1 > 0.0 && e2 > 0.0) ? std::log(e1 / e2) / std::log(h1 / h2) : 2.0;
  return out;
}

// Closed oriented base surface with constant curvature.  The constructor
// enforces total curvature = 2 pi Euler characteristic.
class BaseSurface {
 public:
  static BaseSurface hyperbolic(int genus) {
    if (genus < 2) {
      throw domain_error("hyperbolic base needs genus >= 2, got " +
                         std::to_string(genus));
    }
    return BaseSurface(-1.0, 4.0 * kPi * (genus - 1), 2 - 2 * genus, genus);
  }

  static BaseSurface round_sphere() { return BaseSurface(1.0, 4.0 * kPi, 2, std::nullopt); }

  static BaseSurface with_data(double curvature, double area, int euler_char,
                               std::optional<int> genus = std::nullopt) {
    return BaseSurface(curvature, area, euler_char, genus);
  }

  double curvature() const { return curvature_; }
  double area() const { return area_; }
  int euler_char() const { return euler_char_; }
  const std::optional<int>& genus() const { return genus_; }

 private:
  BaseSurface(double curvature, double area, int euler_char, std::optional<int> genus)
      : curvature_(curvature), area_(area), euler_char_(euler_char), genus_(genus) {
    if (!(area > 0.0)) throw domain_error("base surface needs positive area");
    const double target = 2.0 * kPi * euler_char;
    if (std::abs(curvature * area - target) > 1e-9 * std::max(1.0, std::abs(target))) {
      throw domain_error("base surface violates total-curvature constraint: K*area = " +
                         std::to_string(curvature * area) + ", expected " +
                         std::to_string(target));
    }
    if (genus_ && euler_char != 2 - 2 * *genus_) {
      throw domain_error("base surface genus and Euler characteristic disagree");
    }
  }

  double curvature_;
  double area_;
  int euler_char_;
  std::optional<int> genus_;
};

// Radial interval [lo, hi]; lo == hi is the degenerate empty slab.
struct Slab {
  double lo = 0.0;
  double hi = 0.0;
  Slab(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw domain_error("slab needs lo <= hi");
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw domain_error("slab endpoints must be finite");
    }
  }
  static Slab symmetric(double half_width) {
    if (!(half_width >= 0.0)) throw domain_error("slab half-width must be >= 0");
    return Slab(-half_width, half_width);
  }
  double width() const { return hi - lo; }
};

// The ambient space: base x R with metric dr^2 + f(r)^2 g_base.  `window`
// bounds the radial range on which suprema and certificates are computed.
class WarpedProduct {
 public:
  WarpedProduct(BaseSurface base, WarpFunction warp, double window = 25.0)
      : base_(std::move(base)), warp_(std::move(warp)), window_(window) {
    if (!(window_ > 0.0)) throw domain_error("working window must be positive");
  }

  static WarpedProduct fuchsian(int genus, double window = 25.0) {
    return WarpedProduct(BaseSurface::hyperbolic(genus), WarpFunction::hyperbolic_cosh(),
                         window);
  }

  static WarpedProduct spherical_cosh(double window = 25.0) {
    return WarpedProduct(BaseSurface::round_sphere(), WarpFunction::hyperbolic_cosh(),
                         window);
  }

  const BaseSurface& base() const { return base_; }
  const WarpFunction& warp() const { return warp_; }
  double window() const { return window_; }

  // area of the slice {r = const}
  double slice_area(double r) const {
    const double f = warp_(r);
    return base_.area() * f * f;
  }

  // volume of base x [lo, hi], by adaptive quadrature of the slice area
  double slab_volume(const Slab& s, const QuadratureOptions& opt = {}) const {
    if (s.lo == s.hi) return 0.0;
    return base_.area() *
           integrate([this](double t) { const double f = warp_(t); return f * f; }, s.lo,
                     s.hi, opt);
  }

  // mean curvature of the slice {r = const} with respect to d/dr
  double slice_mean_curvature(double r) const {
    const double f = warp_(r);
    if (f == 0.0) throw domain_error("warp vanishes; slice is degenerate");
    return warp_.deriv1(r) / f;
  }

 private:
  BaseSurface base_;
  WarpFunction warp_;
  double window_;
};

}  // namespace warpiso
