#include "nematic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nematic/grid_utils.hpp"

namespace nematic {

namespace {

double csq(const ModelParams& p, double n1) {
  n1 = std::clamp(n1, -1.0, 1.0);
  return p.alpha + (p.gamma - p.alpha) * n1 * n1;
}

// Flux divergence (c^2(n1) n_x)_x with half-node speeds, interior nodes only.
void flux_divergence(const Field3& n, const ModelParams& p, double dx,
                     Field3& out) {
  const Eigen::Index m = n.cols();
  out.setZero();
  for (Eigen::Index j = 1; j + 1 < m; ++j) {
    const double c2r = csq(p, 0.5 * (n(0, j) + n(0, j + 1)));
    const double c2l = csq(p, 0.5 * (n(0, j) + n(0, j - 1)));
    out.col(j) = (c2r * (n.col(j + 1) - n.col(j)) -
                  c2l * (n.col(j) - n.col(j - 1))) /
                 (dx * dx);
  }
}

}  // namespace

std::vector<PhysicalSnapshot> fd_solve(const InitialData& data,
                                       const ModelParams& params,
                                       const FDConfig& cfg,
                                       const std::vector<double>& times) {
  const double margin = 1.2 * params.c1 * cfg.T + 10.0 * cfg.dx;
  const double x_lo = data.support.lo - margin;
  const double x_hi = data.support.hi + margin;
  const Eigen::Index m =
      static_cast<Eigen::Index>(std::ceil((x_hi - x_lo) / cfg.dx)) + 1;
  VecX xs(m);
  for (Eigen::Index j = 0; j < m; ++j) xs[j] = x_lo + j * cfg.dx;
  const double dt = cfg.cfl * cfg.dx / params.c1;
  const int steps = static_cast<int>(std::ceil(cfg.T / dt - 1e-12));

  const Vec3 zeta(params.gamma, params.alpha, params.alpha);

  Field3 prev(3, m), cur(3, m), next(3, m), nt0(3, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    prev.col(j) = data.n0(xs[j]);
    nt0.col(j) = data.n1t(xs[j]);
  }

  double nx_max0 = 0.0;
  {
    const Field3 nx = gradient(xs, prev);
    nx_max0 = nx.colwise().norm().maxCoeff();
  }
  const double nx_guard = cfg.blowup_factor * std::max(1.0, nx_max0);

  // Source at a given (n, nt, nx) state.
  Field3 lap(3, m), nx(3, m);
  auto source = [&](const Field3& n, const Field3& ntv, const Field3& nxv,
                    Field3& out) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double c2 = csq(params, n(0, j));
      const double nt2 = ntv.col(j).squaredNorm();
      const double nx2 = nxv.col(j).squaredNorm();
      for (int i = 0; i < 3; ++i) {
        out(i, j) = (-nt2 + (2.0 * c2 - zeta[i]) * nx2) * n(i, j);
      }
    }
  };

  // Taylor start: n^1 = n^0 + dt nt^0 + dt^2/2 (flux + source).
  flux_divergence(prev, params, cfg.dx, lap);
  nx = gradient(xs, prev);
  Field3 src(3, m);
  source(prev, nt0, nx, src);
  cur = prev + dt * nt0 + 0.5 * dt * dt * (lap + src);
  if (cfg.projection) cur.colwise().normalize();

  std::vector<PhysicalSnapshot> out;
  std::vector<double> wanted = times;
  std::sort(wanted.begin(), wanted.end());

  auto emit = [&](double t_now, const Field3& n_now, const Field3& nt_now) {
    PhysicalSnapshot s;
    s.time = t_now;
    s.grid_x = xs;
    s.n = n_now;
    if (cfg.projection) s.n.colwise().normalize();
    s.nt = nt_now;
    const Field3 nxs = gradient(xs, s.n);
    s.R.resize(3, m);
    s.S.resize(3, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const double c = std::sqrt(csq(params, s.n(0, j)));
      s.R.col(j) = nt_now.col(j) + c * nxs.col(j);
      s.S.col(j) = nt_now.col(j) - c * nxs.col(j);
    }
    out.push_back(std::move(s));
  };

  if (!wanted.empty() && wanted.front() <= 0.5 * dt) {
    emit(0.0, prev, nt0);
    wanted.erase(wanted.begin());
  }

  Field3 ntk(3, m);
  for (int k = 1; k <= steps; ++k) {
    // Leapfrog with the |n_t|^2 source resolved by a short fixed point:
    // n_t at level k couples to n^{k+1} through the centered difference.
    flux_divergence(cur, params, cfg.dx, lap);
    nx = gradient(xs, cur);
    ntk = (cur - prev) / dt;  // first guess
    for (int pass = 0; pass < 3; ++pass) {
      source(cur, ntk, nx, src);
      next = 2.0 * cur - prev + dt * dt * (lap + src);
      ntk = (next - prev) / (2.0 * dt);
    }
    next.col(0) = cur.col(0);
    next.col(m - 1) = cur.col(m - 1);
    if (cfg.projection) next.colwise().normalize();

    const double nx_max = nx.colwise().norm().maxCoeff();
    if (nx_max > nx_guard) {
      throw Error("GradientExplosion",
                  "max|n_x| = " + std::to_string(nx_max) +
                      " exceeded the smooth-regime guard at t = " +
                      std::to_string(k * dt));
    }

    const double t_now = k * dt;
    while (!wanted.empty() && wanted.front() <= t_now + 0.5 * dt) {
      emit(t_now, cur, ntk);
      wanted.erase(wanted.begin());
    }
    prev.swap(cur);
    cur.swap(next);
  }
  if (out.empty() || out.back().time < steps * dt - 0.5 * dt) {
    ntk = (cur - prev) / dt;
    emit(steps * dt, cur, ntk);
  }
  return out;
}

SolutionDifference compare_solutions(const PhysicalSnapshot& a,
                                     const PhysicalSnapshot& b) {
  const double lo = std::max(a.grid_x[0], b.grid_x[0]);
  const double hi =
      std::min(a.grid_x[a.size() - 1], b.grid_x[b.size() - 1]);
  if (!(hi > lo)) {
    throw Error("NoOverlap", "snapshots do not share an x-range");
  }
  std::vector<double> xs;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a.grid_x[k] >= lo && a.grid_x[k] <= hi) xs.push_back(a.grid_x[k]);
  }
  SolutionDifference d;
  VecX w(static_cast<Eigen::Index>(xs.size()));
  VecX dn2(w.size()), dnt2(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double x = xs[static_cast<size_t>(k)];
    const Vec3 na = interp_linear(a.grid_x, a.n, x);
    const Vec3 nb = interp_linear(b.grid_x, b.n, x);
    const Vec3 ta = interp_linear(a.grid_x, a.nt, x);
    const Vec3 tb = interp_linear(b.grid_x, b.nt, x);
    dn2[k] = (na - nb).squaredNorm();
    dnt2[k] = (ta - tb).squaredNorm();
    d.linf_n = std::max(d.linf_n, (na - nb).norm());
  }
  VecX grid(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k)
    grid[k] = xs[static_cast<size_t>(k)];
  d.l2_n = std::sqrt(trapezoid(grid, dn2));
  d.l2_nt = std::sqrt(trapezoid(grid, dnt2));
  return d;
}

}  // namespace nematic
