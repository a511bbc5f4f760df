#pragma once

#include <vector>

#include "nematic/initial_data.hpp"
#include "nematic/model.hpp"
#include "nematic/state.hpp"

namespace nematic {

/// Finite-difference reference solver configuration. dt = cfl * dx / c1.
struct FDConfig {
  double dx = 1e-3;
  double cfl = 0.8;
  double T = 0.1;
  bool projection = true;  // renormalize |n|=1 each step
  double blowup_factor = 50.0;  // abort when max|n_x| grows past this
};

/// Integrates the second-order system directly in physical variables
/// (leapfrog in time, centered in space) over the smooth window; returns
/// snapshots at the requested times (plus the final time if not listed).
/// Aborts with GradientExplosion when the gradient guard trips.
std::vector<PhysicalSnapshot> fd_solve(const InitialData& data,
                                       const ModelParams& params,
                                       const FDConfig& cfg,
                                       const std::vector<double>& times);

struct SolutionDifference {
  double l2_n = 0.0;
  double l2_nt = 0.0;
  double linf_n = 0.0;
};

/// Interpolates b onto a's grid over the overlapping x-range and reports
/// L2/Linf differences of n and L2 of n_t.
SolutionDifference compare_solutions(const PhysicalSnapshot& a,
                                     const PhysicalSnapshot& b);

}  // namespace nematic
