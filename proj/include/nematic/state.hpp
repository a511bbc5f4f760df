#pragma once

#include <utility>
#include <vector>

#include "nematic/model.hpp"
#include "nematic/types.hpp"

namespace nematic {

inline constexpr double kUnitNormTol = 1e-8;  // constructor tolerance on |n|

/// Closed x-interval, used for concentration flags and data support.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// All physical fields at a fixed time on a strictly increasing grid.
/// R = n_t + c n_x and S = n_t - c n_x carry the backward/forward energy
/// densities |R|^2 and |S|^2; nt == (R+S)/2 by construction.
struct PhysicalSnapshot {
  double time = 0.0;
  VecX grid_x;
  Field3 n;
  Field3 nt;
  Field3 R;
  Field3 S;

  // Reconstruction diagnostics: worst |n|-1 and n.R/n.S residuals *before*
  // the on-manifold projection applied by the producer, and intervals where
  // energy concentrates (h below the singular threshold).
  double unit_defect_pre = 0.0;
  double ortho_defect_pre = 0.0;
  std::vector<Interval> concentration;

  Eigen::Index size() const { return grid_x.size(); }
};

/// Validates grid monotonicity, |n|=1 and the nt=(R+S)/2, n.R, n.S
/// consistency conditions. Throws UnitNormViolation / GridMismatch.
void validate_snapshot(const PhysicalSnapshot& snap, double tol_unit = kUnitNormTol);

struct EnergyProfile {
  VecX e_minus;  // |R|^2 per node
  VecX e_plus;   // |S|^2 per node
  double total = 0.0;
};

/// Riemann decomposition at a single state.
std::pair<Vec3, Vec3> decompose(const Vec3& n, const Vec3& nt, const Vec3& nx,
                                const ModelParams& params);

/// Inverse of decompose: nt = (R+S)/2, nx = (R-S)/(2 c(n1)).
std::pair<Vec3, Vec3> reconstruct_gradients(const Vec3& R, const Vec3& S,
                                            double n1, const ModelParams& params);

/// Nodewise energy densities plus the trapezoid total. The total equals the
/// conserved quantity E0 = 2*int(|n_t|^2 + c^2 |n_x|^2) dx.
EnergyProfile energy_profile(const PhysicalSnapshot& snap);

/// Finite-difference residuals of the two directional energy balance laws
/// between two snapshots on a shared grid (forward in t, centered in x,
/// sources at the midpoint time). Diagnostic only.
std::pair<VecX, VecX> balance_residual(const PhysicalSnapshot& a,
                                       const PhysicalSnapshot& b,
                                       const ModelParams& params);

/// Linear resampling of a snapshot onto a new strictly increasing grid,
/// with the director renormalized and R,S re-projected orthogonal to n.
PhysicalSnapshot resample(const PhysicalSnapshot& snap, const VecX& new_x);

}  // namespace nematic
