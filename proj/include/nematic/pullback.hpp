#pragma once

#include <utility>
#include <vector>

#include "nematic/solver.hpp"
#include "nematic/state.hpp"

namespace nematic {

/// One point of a constant-time curve: the crossing of t = tau in column i,
/// between lattice rows j and j+1 at fraction `frac`.
struct CurvePoint {
  int i = 0;
  int j = 0;
  double frac = 0.0;
  double X = 0.0;
  double Y = 0.0;
};

/// Constant-time curve t(X,Y) = tau, ordered by increasing X; Y decreases
/// along it (monotone flag records this).
struct LevelCurve {
  double tau = 0.0;
  std::vector<CurvePoint> points;
  bool monotone = true;
};

/// Cumulative distribution of a positive measure on the line. Equal
/// consecutive xs encode atoms (jumps of F).
struct MeasureCDF {
  VecX xs;
  VecX F;
  double total() const { return F.size() ? F[F.size() - 1] : 0.0; }
};

/// Per-column crossing of t = tau (t is nondecreasing in Y along columns).
LevelCurve level_set(const ChartGrid& grid, double tau);

/// Chart state linearly interpolated at a curve point.
ChartState curve_state(const ChartGrid& grid, const CurvePoint& pt);

/// Physical snapshot along the curve. The director is renormalized and R,S
/// projected back onto the tangent plane (pre-fix defects recorded);
/// the gauge is floored at the grid's singular threshold inside flagged
/// concentration intervals, which are reported on the snapshot.
PhysicalSnapshot reconstruct(const ChartGrid& grid, double tau);

/// Backward/forward energy measures at time tau as CDFs in x, built from
/// the chart densities p(1-h1) dX and q(1-h2)(-dY); finite across cusps,
/// where mass shows up as jumps at stalled x.
std::pair<MeasureCDF, MeasureCDF> energy_measures(const ChartGrid& grid,
                                                  double tau);

/// Max over node pairs within a window (10% of the domain width) of
/// |n(x)-n(y)| / |x-y|^(1/2).
double holder_estimate(const PhysicalSnapshot& snap);

/// Value of the CDF at x (left-continuous limit convention: mass strictly
/// left of the first node is zero).
double cdf_value(const MeasureCDF& cdf, double x);

}  // namespace nematic
