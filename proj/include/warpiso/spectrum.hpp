#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/quadrature.hpp"
#include "warpiso/radial.hpp"
#include "warpiso/warp.hpp"

namespace warpiso {

enum class BoundaryCondition { Dirichlet, Neumann };

struct SpectralResult {
  double lambda0 = 0.0;
  double residual = 0.0;          // ||C v - lambda v||_inf of the discrete pair
  double rayleigh_of_sech = 0.0;  // continuum Rayleigh quotient of sech on [-L, L]
  int bisection_iterations = 0;
  double half_width = 0.0;
  int grid_n = 0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
};

inline double rayleigh_quotient(const WarpedProduct& m, const RadialFunction& u,
                                double L);

namespace detail {

struct Tridiag {
  std::vector<double> d;  // diagonal
  std::vector<double> e;  // off-diagonal (symmetric)
};

// Number of eigenvalues strictly below x, from the signs of the LDL^T pivots.
inline int sturm_count_below(const Tridiag& t, double x) {
  const double pivmin = 1e-280;
  int count = 0;
  double q = 1.0;
  const int n = static_cast<int>(t.d.size());
  for (int i = 0; i < n; ++i) {
    const double off = (i == 0) ? 0.0 : t.e[i - 1] * t.e[i - 1] / q;
    q = t.d[i] - x - off;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

inline double smallest_eigenvalue(const Tridiag& t, int* iterations) {
  const int n = static_cast<int>(t.d.size());
  double lo = t.d[0], hi = t.d[0];
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.e[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(t.e[i]) : 0.0);
    lo = std::min(lo, t.d[i] - r);
    hi = std::max(hi, t.d[i] + r);
  }
  int iters = 0;
  while (iters < 2000) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count_below(t, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iters;
  }
  if (iterations) *iterations = iters;
  return 0.5 * (lo + hi);
}

// Solves (T - sigma I) x = rhs in place; tridiagonal Gaussian elimination
// with partial pivoting (one super-superdiagonal of fill-in).
inline void shifted_solve(const Tridiag& t, double sigma, std::vector<double>& x) {
  const int n = static_cast<int>(t.d.size());
  const double tiny = 1e-280;
  std::vector<double> diag(n), sup1(n, 0.0), sup2(n, 0.0), sub(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = t.d[i] - sigma;
  for (int i = 0; i + 1 < n; ++i) {
    sup1[i] = t.e[i];
    sub[i] = t.e[i];
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i]) > std::abs(diag[i])) {
      std::swap(diag[i], sub[i]);
      std::swap(sup1[i], diag[i + 1]);
      std::swap(sup2[i], sup1[i + 1]);
      std::swap(x[i], x[i + 1]);
    }
    if (diag[i] == 0.0) diag[i] = tiny;
    const double m = sub[i] / diag[i];
    diag[i + 1] -= m * sup1[i];
    sup1[i + 1] -= m * sup2[i];
    x[i + 1] -= m * x[i];
  }
  if (diag[n - 1] == 0.0) diag[n - 1] = tiny;
  x[n - 1] /= diag[n - 1];
  if (n >= 2) x[n - 2] = (x[n - 2] - sup1[n - 2] * x[n - 1]) / diag[n - 2];
  for (int i = n - 3; i >= 0; --i) {
    x[i] = (x[i] - sup1[i] * x[i + 1] - sup2[i] * x[i + 2]) / diag[i];
  }
}

inline void tridiag_apply(const Tridiag& t, const std::vector<double>& v,
                          std::vector<double>& out) {
  const int n = static_cast<int>(t.d.size());
  out.resize(n);
  for (int i = 0; i < n; ++i) {
    double s = t.d[i] * v[i];
    if (i > 0) s += t.e[i - 1] * v[i - 1];
    if (i + 1 < n) s += t.e[i] * v[i + 1];
    out[i] = s;
  }
}

}  // namespace detail

// Bottom of the spectrum of the weighted radial operator
//   -(f^2 u')' = lambda f^2 u   on [-L, L]
// discretized with face-centered weights and solved in symmetrized form by
// Sturm-sequence bisection plus inverse iteration.
inline SpectralResult lambda0_truncated(const WarpedProduct& m, double L, int n,
                                        BoundaryCondition bc) {
  if (!(L > 0.0) || !std::isfinite(L)) throw domain_error("half-width L must be positive");
  if (n < 100) throw domain_error("spectral grid needs n >= 100");
  const double wL = m.warp()(L) * m.warp()(L);
  if (!std::isfinite(wL)) {
    throw domain_error("warp weight overflows at the window edge; reduce L");
  }

  const double dr = 2.0 * L / n;
  std::vector<double> wn(n + 1), wf(n);  // node and face weights f^2
  for (int i = 0; i <= n; ++i) {
    const double f = m.warp()(-L + dr * i);
    wn[i] = f * f;
  }
  for (int i = 0; i < n; ++i) {
    const double f = m.warp()(-L + dr * (i + 0.5));
    wf[i] = f * f;
  }

  // Symmetrized operator C = M^{-1/2} A M^{-1/2}: A from the quadratic energy
  // sum_faces wf (du/dr)^2 dr, M the lumped mass diag(wn dr) (halved at
  // Neumann endpoints).  Dirichlet keeps interior nodes only.
  detail::Tridiag t;
  const int lo_node = (bc == BoundaryCondition::Dirichlet) ? 1 : 0;
  const int hi_node = (bc == BoundaryCondition::Dirichlet) ? n - 1 : n;
  const int size = hi_node - lo_node + 1;
  if (size < 3) throw domain_error("spectral grid too small after boundary conditions");
  t.d.resize(size);
  t.e.resize(size - 1);
  const auto mass = [&](int node) {
    double v = wn[node] * dr;
    if (bc == BoundaryCondition::Neumann && (node == 0 || node == n)) v *= 0.5;
    return v;
  };
  for (int k = 0; k < size; ++k) {
    const int node = lo_node + k;
    double a = 0.0;
    if (node > 0) a += wf[node - 1] / dr;
    if (node < n) a += wf[node] / dr;
    t.d[k] = a / mass(node);
  }
  for (int k = 0; k + 1 < size; ++k) {
    const int node = lo_node + k;
    t.e[k] = -(wf[node] / dr) / std::sqrt(mass(node) * mass(node + 1));
  }

  SpectralResult out;
  out.half_width = L;
  out.grid_n = n;
  out.bc = bc;
  out.lambda0 = detail::smallest_eigenvalue(t, &out.bisection_iterations);

  // Inverse iteration for the ground vector, then a Rayleigh-quotient polish.
  std::vector<double> v(size);
  for (int i = 0; i < size; ++i) v[i] = 1.0 + 0.5 * std::sin(2.7 * i);
  for (int pass = 0; pass < 3; ++pass) {
    detail::shifted_solve(t, out.lambda0, v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw numeric_error("inverse iteration collapsed while refining lambda0");
    }
    for (double& x : v) x /= norm;
  }
  std::vector<double> tv;
  detail::tridiag_apply(t, v, tv);
  double rq = 0.0;
  for (int i = 0; i < size; ++i) rq += v[i] * tv[i];
  double resid = 0.0, vmax = 0.0;
  for (int i = 0; i < size; ++i) {
    resid = std::max(resid, std::abs(tv[i] - rq * v[i]));
    vmax = std::max(vmax, std::abs(v[i]));
  }
  out.residual = resid / vmax;
  // Keep the bisection value (certified by eigenvalue counts) unless the
  // Rayleigh polish agrees to within its own residual.
  if (std::abs(rq - out.lambda0) < 1e-6 * std::max(1.0, std::abs(out.lambda0))) {
    out.lambda0 = rq;
  }

  out.rayleigh_of_sech = rayleigh_quotient(m, RadialFunction::sech_r(), L);
  return out;
}

// Continuum Rayleigh quotient  int w u'^2 / int w u^2  on [-L, L], w = f^2.
inline double rayleigh_quotient(const WarpedProduct& m, const RadialFunction& u,
                                double L) {
  if (!(L > 0.0)) throw domain_error("Rayleigh quotient needs L > 0");
  const auto& w = m.warp();
  const double num = integrate(
      [&](double r) {
        const double f = w(r);
        const double du = u.deriv1(r);
        return f * f * du * du;
      },
      -L, L);
  const double den = integrate(
      [&](double r) {
        const double f = w(r);
        const double ur = u(r);
        return f * f * ur * ur;
      },
      -L, L);
  if (!(den > 0.0)) throw domain_error("trial function vanishes in L^2(w)");
  return num / den;
}

// lambda0 of the model with end invariant D: D (2 - D) for D in [1, 2].
inline double sullivan_lambda0(double d) {
  if (!(d >= 1.0 && d <= 2.0)) {
    throw domain_error("end invariant must lie in [1, 2], got " + std::to_string(d));
  }
  return d * (2.0 - d);
}

}  // namespace warpiso
