#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/radial.hpp"
#include "warpiso/warp.hpp"

namespace warpiso {

// Finite-volume discretization of the radial line [-L, L]: cells carry the
// weight f(center)^2 * dr (volume per unit base area), faces carry f(face)^2
// (boundary area per unit base area).  A candidate region is a union of
// cells; its weighted perimeter is the sum of the face weights it exposes.
struct DiscreteLine {
  double half_width = 0.0;
  int cells = 0;
  std::vector<double> face_pos;     // cells + 1 positions
  std::vector<double> face_weight;  // f(pos)^2
  std::vector<double> cell_weight;  // f(center)^2 * dr
  std::vector<double> prefix;       // prefix[k] = sum of cell_weight[0..k)

  static DiscreteLine build(const WarpedProduct& m, double L, int n) {
    if (!(L > 0.0)) throw domain_error("discrete line needs L > 0");
    if (n < 16) throw domain_error("discrete line needs at least 16 cells");
    DiscreteLine line;
    line.half_width = L;
    line.cells = n;
    const double dr = 2.0 * L / n;
    line.face_pos.resize(n + 1);
    line.face_weight.resize(n + 1);
    line.cell_weight.resize(n);
    line.prefix.assign(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
      const double x = -L + dr * i;
      const double f = m.warp()(x);
      line.face_pos[i] = x;
      line.face_weight[i] = f * f;
    }
    for (int i = 0; i < n; ++i) {
      const double f = m.warp()(-L + dr * (i + 0.5));
      line.cell_weight[i] = f * f * dr;
      line.prefix[i + 1] = line.prefix[i] + line.cell_weight[i];
    }
    return line;
  }

  double volume(int face_lo, int face_hi) const {
    return prefix[face_hi] - prefix[face_lo];
  }
};

struct CutInterval {
  int face_lo = 0;
  int face_hi = 0;
  double lo = 0.0;
  double hi = 0.0;
};

struct DiscreteCut {
  double quotient = 0.0;
  std::vector<CutInterval> intervals;
};

namespace detail {

struct IntervalCandidate {
  double quotient = std::numeric_limits<double>::infinity();
  int i = -1;
  int j = -1;
};

// Tie rule: smaller quotient, then smaller left face, then smaller width.
inline bool improves(const IntervalCandidate& cand, const IntervalCandidate& best) {
  if (cand.quotient != best.quotient) return cand.quotient < best.quotient;
  if (cand.i != best.i) return cand.i < best.i;
  return (cand.j - cand.i) < (best.j - best.i);
}

inline IntervalCandidate best_single_interval(const DiscreteLine& line, int jobs) {
  const int nfaces = line.cells + 1;
  jobs = std::max(1, std::min(jobs, 64));
  std::vector<IntervalCandidate> slots(jobs);
  const auto scan = [&line, nfaces](int i_begin, int i_end, IntervalCandidate* out) {
    IntervalCandidate best;
    for (int i = i_begin; i < i_end; ++i) {
      const double ci = line.face_weight[i];
      const double pi = line.prefix[i];
      for (int j = i + 1; j < nfaces; ++j) {
        const double vol = line.prefix[j] - pi;
        const double q = (ci + line.face_weight[j]) / vol;
        if (q < best.quotient) {
          best = {q, i, j};
        }
      }
    }
    *out = best;
  };
  if (jobs == 1) {
    scan(0, nfaces, &slots[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int k = 0; k < jobs; ++k) {
      // Balance work: left faces near 0 carry the longest inner loops, so
      // deal faces to workers round-robin.
      pool.emplace_back([&scan, &slots, k, jobs, nfaces]() {
        IntervalCandidate best;
        for (int i = k; i < nfaces; i += jobs) {
          IntervalCandidate local;
          scan(i, i + 1, &local);
          if (improves(local, best)) best = local;
        }
        slots[k] = best;
      });
    }
    for (auto& th : pool) th.join();
  }
  IntervalCandidate best;
  for (const auto& s : slots) {
    if (improves(s, best)) best = s;
  }
  if (best.i < 0) throw numeric_error("single-interval search found no candidate");
  return best;
}

struct PairCandidate {
  double value = std::numeric_limits<double>::infinity();  // cost - q * volume
  int i1 = -1, j1 = -1, i2 = -1, j2 = -1;
  double cost = 0.0, vol = 0.0;
};

// Minimizes cost(P) - q * volume(P) over pairs of disjoint nonempty
// intervals, in O(faces) by splitting at the gap between the components.
inline PairCandidate best_pair_at(const DiscreteLine& line, double q) {
  const int nf = line.cells + 1;
  std::vector<double> start(nf), finish(nf);
  for (int k = 0; k < nf; ++k) {
    start[k] = line.face_weight[k] + q * line.prefix[k];
    finish[k] = line.face_weight[k] - q * line.prefix[k];
  }
  const double inf = std::numeric_limits<double>::infinity();

  // bestL[s]: best interval ending at a face <= s (value, with argmin faces)
  std::vector<double> bestL(nf, inf), bestR(nf, inf);
  std::vector<int> bl_i(nf, -1), bl_j(nf, -1), br_i(nf, -1), br_j(nf, -1);
  {
    double run_min = inf;
    int run_arg = -1;
    for (int j = 1; j < nf; ++j) {
      if (start[j - 1] < run_min) {
        run_min = start[j - 1];
        run_arg = j - 1;
      }
      const double cand = run_min + finish[j];
      bestL[j] = bestL[j - 1];
      bl_i[j] = bl_i[j - 1];
      bl_j[j] = bl_j[j - 1];
      if (cand < bestL[j]) {
        bestL[j] = cand;
        bl_i[j] = run_arg;
        bl_j[j] = j;
      }
    }
  }
  {
    double run_min = inf;
    int run_arg = -1;
    for (int i = nf - 2; i >= 0; --i) {
      if (finish[i + 1] < run_min) {
        run_min = finish[i + 1];
        run_arg = i + 1;
      }
      const double cand = start[i] + run_min;
      bestR[i] = bestR[i + 1];
      br_i[i] = br_i[i + 1];
      br_j[i] = br_j[i + 1];
      if (cand < bestR[i]) {
        bestR[i] = cand;
        br_i[i] = i;
        br_j[i] = run_arg;
      }
    }
  }

  PairCandidate best;
  for (int s = 1; s + 1 < nf; ++s) {
    if (bestL[s] == inf || bestR[s] == inf) continue;
    const double v = bestL[s] + bestR[s];
    if (v < best.value) {
      best.value = v;
      best.i1 = bl_i[s];
      best.j1 = bl_j[s];
      best.i2 = br_i[s];
      best.j2 = br_j[s];
    }
  }
  if (best.i1 < 0) throw numeric_error("pair search found no candidate");
  best.cost = line.face_weight[best.i1] + line.face_weight[best.j1] +
              line.face_weight[best.i2] + line.face_weight[best.j2];
  best.vol = line.volume(best.i1, best.j1) + line.volume(best.i2, best.j2);
  return best;
}

}  // namespace detail

// Exhaustive discrete isoperimetric search over unions of at most
// `max_components` cell intervals.  max_components must be 1 or 2; the
// two-component case runs parametric (Dinkelbach) iteration on top of the
// single-interval optimum.
inline DiscreteCut discrete_cheeger_intervals(const DiscreteLine& line,
                                              int max_components, int jobs = 1) {
  if (max_components < 1 || max_components > 2) {
    throw domain_error("max_components must be 1 or 2");
  }
  if (line.cells < 16) throw domain_error("discrete line is too coarse");

  const auto single = detail::best_single_interval(line, jobs);
  DiscreteCut cut;
  cut.quotient = single.quotient;
  cut.intervals.push_back({single.i, single.j, line.face_pos[single.i],
                           line.face_pos[single.j]});
  if (max_components == 1) return cut;

  // Feasible starting pair: outermost thirds.
  const int nf = line.cells + 1;
  const int a = nf / 3, b = 2 * nf / 3;
  double q = (line.face_weight[0] + line.face_weight[a] + line.face_weight[b] +
              line.face_weight[nf - 1]) /
             (line.volume(0, a) + line.volume(b, nf - 1));
  detail::PairCandidate pair;
  const double scale = line.prefix[line.cells];
  for (int iter = 0; iter < 200; ++iter) {
    pair = detail::best_pair_at(line, q);
    const double next = pair.cost / pair.vol;
    if (!(next < q * (1.0 - 1e-15)) || std::abs(pair.value) <= 1e-14 * q * scale) {
      q = std::min(q, next);
      break;
    }
    q = next;
  }

  if (q < cut.quotient) {
    DiscreteCut two;
    two.quotient = q;
    two.intervals.push_back({pair.i1, pair.j1, line.face_pos[pair.i1],
                             line.face_pos[pair.j1]});
    two.intervals.push_back({pair.i2, pair.j2, line.face_pos[pair.i2],
                             line.face_pos[pair.j2]});
    return two;
  }
  return cut;
}

// Largest scaled gap between the analytic radial Laplacian and its pure
// finite-difference evaluation, over the given radii.  Step h is clamped to
// [1e-6, 1e-2]; outside that range roundoff or truncation dominates.
inline double fd_operator_check(const WarpedProduct& m, const RadialFunction& u,
                                const std::vector<double>& grid, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) {
    throw domain_error("finite-difference step must lie in [1e-6, 1e-2]");
  }
  if (grid.empty()) throw domain_error("finite-difference check needs a non-empty grid");
  double worst = 0.0;
  for (double r : grid) {
    const double analytic = radial_laplacian(m, u, r);
    const double d2 = (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
    const double d1 = (u(r + h) - u(r - h)) / (2.0 * h);
    const double fd = d2 + 2.0 * m.slice_mean_curvature(r) * d1;
    worst = std::max(worst, std::abs(analytic - fd) / std::max(1.0, std::abs(analytic)));
  }
  return worst;
}

}  // namespace warpiso
