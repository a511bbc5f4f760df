#include "nematic/pullback.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nematic/grid_utils.hpp"

namespace nematic {

LevelCurve level_set(const ChartGrid& grid, double tau) {
  const int n = grid.n_diag();
  LevelCurve curve;
  curve.tau = tau;
  if (tau < 0.0) {
    throw Error("TauOutOfRange", "tau must be nonnegative");
  }
  for (int i = 0; i <= n; ++i) {
    const int j_lo = n - i;
    if (grid.state(i, n).t < tau) continue;  // column never reaches tau
    if (tau == 0.0) {
      curve.points.push_back(
          {i, std::min(j_lo, n - 1), (j_lo == n) ? 1.0 : 0.0,
           grid.X_axis()[i], grid.Y_axis()[j_lo]});
      continue;
    }
    // t is nondecreasing in Y to scheme accuracy; find the first bracket.
    for (int j = j_lo; j < n; ++j) {
      const double t0 = grid.state(i, j).t;
      const double t1 = grid.state(i, j + 1).t;
      if (t0 <= tau && tau <= t1) {
        const double frac = (t1 > t0) ? (tau - t0) / (t1 - t0) : 0.0;
        curve.points.push_back(
            {i, j, frac,
             grid.X_axis()[i],
             grid.Y_axis()[j] + frac * (grid.Y_axis()[j + 1] - grid.Y_axis()[j])});
        break;
      }
    }
  }
  if (curve.points.empty()) {
    throw Error("TauOutOfRange",
                "tau = " + std::to_string(tau) +
                    " is not attained inside the solved grid");
  }
  for (size_t k = 0; k + 1 < curve.points.size(); ++k) {
    if (curve.points[k + 1].Y > curve.points[k].Y) curve.monotone = false;
  }
  return curve;
}

ChartState curve_state(const ChartGrid& grid, const CurvePoint& pt) {
  const ChartState& a = grid.state(pt.i, pt.j);
  const int j1 = std::min(pt.j + 1, grid.n_diag());
  const ChartState& b = grid.state(pt.i, j1);
  const double f = pt.frac;
  ChartState u;
  u.n = (1.0 - f) * a.n + f * b.n;
  u.l = (1.0 - f) * a.l + f * b.l;
  u.m = (1.0 - f) * a.m + f * b.m;
  u.h1 = (1.0 - f) * a.h1 + f * b.h1;
  u.h2 = (1.0 - f) * a.h2 + f * b.h2;
  u.p = (1.0 - f) * a.p + f * b.p;
  u.q = (1.0 - f) * a.q + f * b.q;
  u.x = (1.0 - f) * a.x + f * b.x;
  u.t = (1.0 - f) * a.t + f * b.t;
  return u;
}

PhysicalSnapshot reconstruct(const ChartGrid& grid, double tau) {
  const LevelCurve curve = level_set(grid, tau);
  const double h_sing = grid.h_sing;

  std::vector<ChartState> states;
  states.reserve(curve.points.size());
  for (const CurvePoint& pt : curve.points) {
    states.push_back(curve_state(grid, pt));
  }

  // Concentration intervals: maximal runs where a gauge sits at/below the
  // singular threshold. x stalls there; keep one representative node per run
  // for the snapshot and report the interval.
  PhysicalSnapshot snap;
  snap.time = tau;
  std::vector<double> xs;
  std::vector<Vec3> nn, RR, SS;
  const double x_span =
      std::abs(states.back().x - states.front().x) + 1.0;
  const double min_dx = 1e-12 * x_span;

  bool in_conc = false;
  double conc_start = 0.0;
  double last_x = states.front().x - 1.0;
  for (const ChartState& u : states) {
    const bool conc = (u.h1 <= h_sing) || (u.h2 <= h_sing);
    if (conc && !in_conc) {
      in_conc = true;
      conc_start = u.x;
    } else if (!conc && in_conc) {
      in_conc = false;
      snap.concentration.push_back({conc_start, u.x});
    }

    if (u.x <= last_x + min_dx) continue;  // collapse stalled x
    last_x = u.x;

    Vec3 n = u.n;
    const double unit_defect = std::abs(n.norm() - 1.0);
    snap.unit_defect_pre = std::max(snap.unit_defect_pre, unit_defect);
    n.normalize();
    Vec3 R = u.l / std::max(u.h1, h_sing);
    Vec3 S = u.m / std::max(u.h2, h_sing);
    const double ortho =
        std::max(std::abs(n.dot(R)), std::abs(n.dot(S)));
    snap.ortho_defect_pre = std::max(snap.ortho_defect_pre, ortho);
    R -= n.dot(R) * n;
    S -= n.dot(S) * n;

    xs.push_back(u.x);
    nn.push_back(n);
    RR.push_back(R);
    SS.push_back(S);
  }
  if (in_conc) {
    snap.concentration.push_back({conc_start, states.back().x});
  }

  const Eigen::Index m = static_cast<Eigen::Index>(xs.size());
  snap.grid_x.resize(m);
  snap.n.resize(3, m);
  snap.nt.resize(3, m);
  snap.R.resize(3, m);
  snap.S.resize(3, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    snap.grid_x[k] = xs[static_cast<size_t>(k)];
    snap.n.col(k) = nn[static_cast<size_t>(k)];
    snap.R.col(k) = RR[static_cast<size_t>(k)];
    snap.S.col(k) = SS[static_cast<size_t>(k)];
    snap.nt.col(k) = 0.5 * (RR[static_cast<size_t>(k)] + SS[static_cast<size_t>(k)]);
  }
  validate_snapshot(snap);
  return snap;
}

std::pair<MeasureCDF, MeasureCDF> energy_measures(const ChartGrid& grid,
                                                  double tau) {
  const LevelCurve curve = level_set(grid, tau);
  const size_t m = curve.points.size();
  std::vector<ChartState> states(m);
  for (size_t k = 0; k < m; ++k) {
    states[k] = curve_state(grid, curve.points[k]);
  }

  MeasureCDF minus, plus;
  minus.xs.resize(static_cast<Eigen::Index>(m));
  minus.F.resize(static_cast<Eigen::Index>(m));
  plus.xs.resize(static_cast<Eigen::Index>(m));
  plus.F.resize(static_cast<Eigen::Index>(m));

  double Fm = 0.0, Fp = 0.0;
  minus.xs[0] = states[0].x;
  plus.xs[0] = states[0].x;
  minus.F[0] = 0.0;
  plus.F[0] = 0.0;
  for (size_t k = 0; k + 1 < m; ++k) {
    const ChartState& a = states[k];
    const ChartState& b = states[k + 1];
    const double dX = curve.points[k + 1].X - curve.points[k].X;
    const double dY = curve.points[k + 1].Y - curve.points[k].Y;
    const double dens_m = 0.5 * (a.p * (1.0 - a.h1) + b.p * (1.0 - b.h1));
    const double dens_p = 0.5 * (a.q * (1.0 - a.h2) + b.q * (1.0 - b.h2));
    Fm += dens_m * dX;
    Fp += dens_p * (-dY);
    const Eigen::Index kk = static_cast<Eigen::Index>(k) + 1;
    // x is nondecreasing along the curve up to roundoff; clamp so the CDF
    // abscissae never step backward.
    minus.xs[kk] = std::max(b.x, minus.xs[kk - 1]);
    plus.xs[kk] = minus.xs[kk];
    minus.F[kk] = Fm;
    plus.F[kk] = Fp;
  }
  return {minus, plus};
}

double holder_estimate(const PhysicalSnapshot& snap) {
  const Eigen::Index n = snap.size();
  if (n < 2) return 0.0;
  const double window = 0.1 * (snap.grid_x[n - 1] - snap.grid_x[0]);
  double best = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dx = snap.grid_x[j] - snap.grid_x[i];
      if (dx > window) break;
      const double dn = (snap.n.col(j) - snap.n.col(i)).norm();
      best = std::max(best, dn / std::sqrt(dx));
    }
  }
  return best;
}

double cdf_value(const MeasureCDF& cdf, double x) {
  if (cdf.xs.size() == 0 || x < cdf.xs[0]) return 0.0;
  if (x >= cdf.xs[cdf.xs.size() - 1]) return cdf.total();
  // Rightmost entry with xs <= x (atoms stack at equal xs).
  Eigen::Index lo = 0, hi = cdf.xs.size() - 1;
  while (hi - lo > 1) {
    const Eigen::Index mid = (lo + hi) / 2;
    (cdf.xs[mid] <= x ? lo : hi) = mid;
  }
  return cdf.F[lo];
}

}  // namespace nematic
