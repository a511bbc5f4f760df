#include "nematic/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nematic/pullback.hpp"

namespace nematic {

namespace {

double lattice_mismatch(double a, double b, double h) {
  return std::abs(a - b) / h;
}

struct CellUpdate {
  ChartState next;
  double delta = 0.0;
};

// One trapezoidal corrector pass for the cell with south parent (Y-marching
// fields), west parent (X-marching fields) and current iterate `cur`.
CellUpdate corrector(const ChartState& south, const SemilinearRhs& rhs_s,
                     const ChartState& west, const SemilinearRhs& rhs_w,
                     const ChartState& cur, const ModelParams& params,
                     double h) {
  const SemilinearRhs rhs_c = semilinear_rhs(cur, params);
  const double hh = 0.5 * h;

  ChartState u;
  u.l = south.l + hh * (rhs_s.l_Y + rhs_c.l_Y);
  u.n = south.n + hh * (rhs_s.n_Y + rhs_c.n_Y);
  u.h1 = south.h1 + hh * (rhs_s.h1_Y + rhs_c.h1_Y);
  u.p = south.p + hh * (rhs_s.p_Y + rhs_c.p_Y);
  u.m = west.m + hh * (rhs_w.m_X + rhs_c.m_X);
  u.h2 = west.h2 + hh * (rhs_w.h2_X + rhs_c.h2_X);
  u.q = west.q + hh * (rhs_w.q_X + rhs_c.q_X);
  u.t = 0.5 * (south.t + hh * (rhs_s.t_Y + rhs_c.t_Y) +
               west.t + hh * (rhs_w.t_X + rhs_c.t_X));
  u.x = 0.5 * (south.x + hh * (rhs_s.x_Y + rhs_c.x_Y) +
               west.x + hh * (rhs_w.x_X + rhs_c.x_X));

  double d = (u.l - cur.l).cwiseAbs().maxCoeff();
  d = std::max(d, (u.n - cur.n).cwiseAbs().maxCoeff());
  d = std::max(d, (u.m - cur.m).cwiseAbs().maxCoeff());
  d = std::max(d, std::abs(u.h1 - cur.h1));
  d = std::max(d, std::abs(u.h2 - cur.h2));
  d = std::max(d, std::abs(u.p - cur.p));
  d = std::max(d, std::abs(u.q - cur.q));
  d = std::max(d, std::abs(u.t - cur.t));
  d = std::max(d, std::abs(u.x - cur.x));
  return {u, d};
}

bool finite(const ChartState& u) {
  return u.l.allFinite() && u.m.allFinite() && u.n.allFinite() &&
         std::isfinite(u.h1) && std::isfinite(u.h2) && std::isfinite(u.p) &&
         std::isfinite(u.q) && std::isfinite(u.t) && std::isfinite(u.x);
}

ChartGrid solve_impl(const BoundaryCurve& boundary, const GridDomain& domain,
                     double h, const ModelParams& params,
                     const PicardOptions& picard, double h_sing) {
  const double len = domain.xmax - domain.xmin;
  const int n = static_cast<int>(std::lround(len / h));
  VecX X(n + 1), Y(n + 1);
  for (int i = 0; i <= n; ++i) {
    X[i] = domain.xmin + i * h;
    Y[i] = domain.ymin + i * h;
  }

  ChartGrid grid(X, Y, params);
  grid.h_sing = h_sing;
  grid.min_p = std::numeric_limits<double>::infinity();
  grid.min_q = std::numeric_limits<double>::infinity();
  grid.min_t_step = 0.0;

  // Data curve: node (i, n-i) takes the boundary state at parameter X_i.
  for (int i = 0; i <= n; ++i) {
    grid.state(i, n - i) = boundary.states[static_cast<size_t>(i)];
    grid.max_constraint_residual =
        std::max(grid.max_constraint_residual,
                 constraint_residual(grid.state(i, n - i)));
  }

  // rhs_cache[i] holds the RHS at the level below for column i.
  std::vector<SemilinearRhs> rhs_cache(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    rhs_cache[static_cast<size_t>(i)] =
        semilinear_rhs(grid.state(i, n - i), params);
  }

  // March anti-diagonals i + j = n + level.
  for (int level = 1; level <= n; ++level) {
    for (int i = level; i <= n; ++i) {
      const int j = n + level - i;
      const ChartState& south = grid.state(i, j - 1);
      const ChartState& west = grid.state(i - 1, j);
      const SemilinearRhs& rhs_s = rhs_cache[static_cast<size_t>(i)];
      const SemilinearRhs rhs_w = semilinear_rhs(west, params);

      // Euler predictor, then trapezoidal correctors to convergence.
      ChartState cur;
      cur.l = south.l + h * rhs_s.l_Y;
      cur.n = south.n + h * rhs_s.n_Y;
      cur.h1 = south.h1 + h * rhs_s.h1_Y;
      cur.p = south.p + h * rhs_s.p_Y;
      cur.m = west.m + h * rhs_w.m_X;
      cur.h2 = west.h2 + h * rhs_w.h2_X;
      cur.q = west.q + h * rhs_w.q_X;
      cur.t = 0.5 * (south.t + h * rhs_s.t_Y + west.t + h * rhs_w.t_X);
      cur.x = 0.5 * (south.x + h * rhs_s.x_Y + west.x + h * rhs_w.x_X);

      const double scale =
          1.0 + std::abs(cur.p) + std::abs(cur.q) + std::abs(cur.t);
      bool converged = false;
      int it = 0;
      for (; it < picard.max_iter; ++it) {
        CellUpdate up = corrector(south, rhs_s, west, rhs_w, cur, params, h);
        cur = up.next;
        if (!finite(cur)) {
          throw Error("PicardDivergence",
                      "non-finite iterate at node (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
        }
        if (up.delta <= picard.tol_fix * scale) {
          converged = true;
          break;
        }
      }
      grid.max_picard_iterations =
          std::max(grid.max_picard_iterations, it + 1);
      if (!converged) {
        throw Error("PicardDivergence",
                    "fixed point did not converge at node (" +
                        std::to_string(i) + "," + std::to_string(j) +
                        "); reduce the step");
      }
      if (!(cur.p > 0.0) || !(cur.q > 0.0)) {
        throw Error("InvariantBlowup",
                    "p or q lost positivity at node (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }

      grid.state(i, j) = cur;
      grid.min_p = std::min(grid.min_p, cur.p);
      grid.min_q = std::min(grid.min_q, cur.q);
      grid.min_t_step =
          std::min({grid.min_t_step, cur.t - south.t, cur.t - west.t});
      grid.max_constraint_residual =
          std::max(grid.max_constraint_residual, constraint_residual(cur));
      rhs_cache[static_cast<size_t>(i)] = semilinear_rhs(cur, params);
    }
  }

  grid.singular = estimate_singularity(grid, h_sing);
  return grid;
}

}  // namespace

ChartGrid::ChartGrid(VecX x_axis, VecX y_axis, ModelParams params)
    : X_(std::move(x_axis)), Y_(std::move(y_axis)), params_(params) {
  nodes_.resize(static_cast<size_t>(X_.size()) * Y_.size());
}

ChartGrid solve_rectangle(const BoundaryCurve& boundary,
                          const GridDomain& domain, const GridSteps& steps,
                          const PicardOptions& picard, double h_sing) {
  if (!(steps.dX > 0.0) || std::abs(steps.dX - steps.dY) > 1e-14) {
    throw Error("ConfigError", "solve_rectangle requires dX == dY > 0");
  }
  const double h = steps.dX;
  if (lattice_mismatch(domain.ymax, -domain.xmin, h) > 1e-9 ||
      lattice_mismatch(domain.ymin, -domain.xmax, h) > 1e-9) {
    throw Error("ConfigError",
                "solve_rectangle domain must be anchored on X+Y=0 "
                "(ymax=-xmin, ymin=-xmax)");
  }
  const double len = domain.xmax - domain.xmin;
  const int n = static_cast<int>(std::lround(len / h));
  if (n < 2 || std::abs(n * h - len) > 1e-9 * std::max(1.0, len)) {
    throw Error("ConfigError", "domain width must be a multiple of the step");
  }
  if (boundary.parameter.size() != n + 1) {
    throw Error("ConfigError",
                "boundary curve must be sampled on the lattice trace of "
                "X+Y=0 (expected " +
                    std::to_string(n + 1) + " nodes, got " +
                    std::to_string(boundary.parameter.size()) + ")");
  }
  for (int i = 0; i <= n; ++i) {
    if (lattice_mismatch(boundary.parameter[i], domain.xmin + i * h, h) >
        1e-9) {
      throw Error("ConfigError",
                  "boundary parameter is not the lattice trace");
    }
  }
  return solve_impl(boundary, domain, h, boundary.params, picard, h_sing);
}

std::vector<SingularPoint> estimate_singularity(const ChartGrid& grid,
                                                double h_sing) {
  std::vector<SingularPoint> points;
  const int n = grid.n_diag();
  for (int i = 0; i <= n; ++i) {
    for (int j = n - i; j <= n; ++j) {
      const ChartState& u = grid.state(i, j);
      if (u.h1 < h_sing) {
        points.push_back({grid.X_axis()[i], grid.Y_axis()[j], u.t, u.x, u.h1,
                          u.n[0], 0});
      }
      if (u.h2 < h_sing) {
        points.push_back({grid.X_axis()[i], grid.Y_axis()[j], u.t, u.x, u.h2,
                          u.n[0], 1});
      }
    }
  }
  std::sort(points.begin(), points.end(),
            [](const SingularPoint& a, const SingularPoint& b) {
              return a.t < b.t;
            });
  return points;
}

ChartGrid solve_for_time(const InitialData& data, const ModelParams& params,
                         double T, double h, const SolveForTimeOptions& opts) {
  double margin = opts.margin_factor * (2.0 * params.c1 * T) + 8.0 * h;
  for (int attempt = 0;; ++attempt) {
    double x_lo = data.support.lo - margin;
    double x_hi = data.support.hi + margin;
    // Snap to the lattice so the domain width is an exact step multiple.
    x_lo = std::floor(x_lo / h) * h;
    x_hi = std::ceil(x_hi / h) * h;
    const GridDomain domain = anchored_domain(x_lo, x_hi);
    const int n = static_cast<int>(std::lround((x_hi - x_lo) / h));
    VecX xs(n + 1);
    for (int i = 0; i <= n; ++i) xs[i] = x_lo + i * h;

    const BoundaryCurve boundary = boundary_data(data, params, xs);
    ChartGrid grid = solve_rectangle(boundary, domain, {h, h}, opts.picard,
                                     opts.h_sing);

    bool ok = true;
    if (T > 0.0) {
      try {
        const LevelCurve curve = level_set(grid, T);
        // Two-cell margin below the lattice top and quiet curve ends.
        for (const CurvePoint& pt : curve.points) {
          if (pt.j + 2 > grid.n_diag()) ok = false;
        }
        const double density_tol = 1e-9;
        for (const CurvePoint* end :
             {&curve.points.front(), &curve.points.back()}) {
          const ChartState u = curve_state(grid, *end);
          const double density = u.p * (1.0 - u.h1) + u.q * (1.0 - u.h2);
          if (density > density_tol) ok = false;
        }
        if (curve.points.size() < 8) ok = false;
      } catch (const Error&) {
        ok = false;
      }
    }
    if (ok) return grid;
    if (attempt >= opts.max_expansions) {
      throw Error("DomainSizingFailure",
                  "could not enclose the t=" + std::to_string(T) +
                      " curve after " + std::to_string(attempt + 1) +
                      " expansions");
    }
    margin *= 1.6;
  }
}

}  // namespace nematic
