#pragma once

#include <vector>

#include "nematic/chart.hpp"
#include "nematic/model.hpp"
#include "nematic/types.hpp"

namespace nematic {

/// Rectangle in the (X,Y) plane. The solver requires a square anchored on
/// the data curve X+Y=0: xmin+ymax == 0 == xmax+ymin, so the curve runs
/// corner to corner and passes through lattice nodes.
struct GridDomain {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

inline GridDomain anchored_domain(double x_lo, double x_hi) {
  return {x_lo, x_hi, -x_hi, -x_lo};
}

struct GridSteps {
  double dX = 0.0, dY = 0.0;
};

struct PicardOptions {
  int max_iter = 40;
  double tol_fix = 1e-13;
};

struct SingularPoint {
  double X = 0.0, Y = 0.0, t = 0.0, x = 0.0;
  double h = 0.0;   // offending gauge value
  double n1 = 0.0;  // director first component at the node
  int family = 0;   // 0: backward (h1), 1: forward (h2)
};

inline constexpr double kDefaultSingularThreshold = 1e-3;

/// Solved field on the lattice. Only nodes on or above the data diagonal
/// (i + j >= n_diag) hold solution values; t >= 0 there.
class ChartGrid {
 public:
  ChartGrid() = default;
  ChartGrid(VecX x_axis, VecX y_axis, ModelParams params);

  const VecX& X_axis() const { return X_; }
  const VecX& Y_axis() const { return Y_; }
  double step() const { return X_.size() > 1 ? X_[1] - X_[0] : 0.0; }
  int n_diag() const { return static_cast<int>(X_.size()) - 1; }
  const ModelParams& params() const { return params_; }

  bool valid(int i, int j) const { return i + j >= n_diag(); }
  const ChartState& state(int i, int j) const {
    return nodes_[static_cast<size_t>(i) * Y_.size() + j];
  }
  ChartState& state(int i, int j) {
    return nodes_[static_cast<size_t>(i) * Y_.size() + j];
  }

  // Solve metadata.
  double max_constraint_residual = 0.0;
  double min_p = 0.0, min_q = 0.0;
  double min_t_step = 0.0;  // most negative observed increment of t
  int max_picard_iterations = 0;
  double h_sing = kDefaultSingularThreshold;
  std::vector<SingularPoint> singular;

 private:
  VecX X_, Y_;
  ModelParams params_;
  std::vector<ChartState> nodes_;
};

/// Integrates the semilinear system upward from the data curve by
/// anti-diagonal marching; each cell solves the two-point characteristic
/// integral equations with trapezoidal quadrature and Picard iteration.
/// The boundary parameter must coincide with the lattice trace of the curve.
ChartGrid solve_rectangle(const BoundaryCurve& boundary,
                          const GridDomain& domain, const GridSteps& steps,
                          const PicardOptions& picard = {},
                          double h_sing = kDefaultSingularThreshold);

/// Nodes where an energy gauge drops below the threshold: cusp candidates.
std::vector<SingularPoint> estimate_singularity(const ChartGrid& grid,
                                                double h_sing);

struct SolveForTimeOptions {
  PicardOptions picard{};
  double h_sing = kDefaultSingularThreshold;
  double margin_factor = 1.15;  // widens the a-priori domain estimate
  int max_expansions = 4;
};

/// Sizes an anchored domain so the constant-time curve t = T fits with a
/// two-cell margin and no energy reaches the lattice boundary, expanding
/// adaptively on failure, then solves.
ChartGrid solve_for_time(const InitialData& data, const ModelParams& params,
                         double T, double h,
                         const SolveForTimeOptions& opts = {});

}  // namespace nematic
