#include "nematic/state.hpp"

#include <cmath>
#include <string>

#include "nematic/grid_utils.hpp"

namespace nematic {

void validate_snapshot(const PhysicalSnapshot& snap, double tol_unit) {
  const Eigen::Index n = snap.grid_x.size();
  if (snap.n.cols() != n || snap.nt.cols() != n || snap.R.cols() != n ||
      snap.S.cols() != n) {
    throw Error("GridMismatch", "snapshot field sizes disagree with grid");
  }
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (!(snap.grid_x[k + 1] > snap.grid_x[k])) {
      throw Error("GridMismatch",
                  "snapshot grid not strictly increasing at index " +
                      std::to_string(k));
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double unit = std::abs(snap.n.col(k).norm() - 1.0);
    if (unit > tol_unit) {
      throw Error("UnitNormViolation",
                  "| |n|-1 | = " + std::to_string(unit) + " at node " +
                      std::to_string(k));
    }
    const Vec3 mid = 0.5 * (snap.R.col(k) + snap.S.col(k));
    if ((snap.nt.col(k) - mid).norm() >
        1e-9 * (1.0 + snap.R.col(k).norm() + snap.S.col(k).norm())) {
      throw Error("GridMismatch",
                  "nt != (R+S)/2 at node " + std::to_string(k));
    }
  }
}

std::pair<Vec3, Vec3> decompose(const Vec3& n, const Vec3& nt, const Vec3& nx,
                                const ModelParams& params) {
  const double unit = std::abs(n.norm() - 1.0);
  if (unit > kUnitNormTol) {
    throw Error("UnitNormViolation",
                "decompose: | |n|-1 | = " + std::to_string(unit));
  }
  const double c = wave_speed(params, n[0]).c;
  return {nt + c * nx, nt - c * nx};
}

std::pair<Vec3, Vec3> reconstruct_gradients(const Vec3& R, const Vec3& S,
                                            double n1, const ModelParams& params) {
  const double c = wave_speed(params, n1).c;
  return {0.5 * (R + S), (R - S) / (2.0 * c)};
}

EnergyProfile energy_profile(const PhysicalSnapshot& snap) {
  EnergyProfile e;
  e.e_minus = snap.R.colwise().squaredNorm().transpose();
  e.e_plus = snap.S.colwise().squaredNorm().transpose();
  e.total = trapezoid(snap.grid_x, VecX(e.e_minus + e.e_plus));
  return e;
}

std::pair<VecX, VecX> balance_residual(const PhysicalSnapshot& a,
                                       const PhysicalSnapshot& b,
                                       const ModelParams& params) {
  const Eigen::Index n = a.grid_x.size();
  if (b.grid_x.size() != n || (a.grid_x - b.grid_x).cwiseAbs().maxCoeff() > 0.0) {
    throw Error("GridMismatch", "balance_residual requires a shared grid");
  }
  if (!(b.time > a.time)) {
    throw Error("GridMismatch", "balance_residual requires a.time < b.time");
  }
  const double dt = b.time - a.time;

  // Midpoint-time fields for the flux and source terms.
  const Field3 R = 0.5 * (a.R + b.R);
  const Field3 S = 0.5 * (a.S + b.S);
  const Field3 nn = 0.5 * (a.n + b.n);
  VecX r2a = a.R.colwise().squaredNorm().transpose();
  VecX r2b = b.R.colwise().squaredNorm().transpose();
  VecX s2a = a.S.colwise().squaredNorm().transpose();
  VecX s2b = b.S.colwise().squaredNorm().transpose();

  VecX flux_m(n), flux_p(n), src(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const WaveSpeed w = wave_speed(params, nn.col(k)[0]);
    const double r2 = R.col(k).squaredNorm();
    const double s2 = S.col(k).squaredNorm();
    flux_m[k] = w.c * r2;
    flux_p[k] = w.c * s2;
    src[k] = w.c_prime / (2.0 * w.c) * (r2 * S.col(k)[0] - R.col(k)[0] * s2);
  }
  const VecX dflux_m = gradient(a.grid_x, flux_m);
  const VecX dflux_p = gradient(a.grid_x, flux_p);

  VecX res_m(n), res_p(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    res_m[k] = (r2b[k] - r2a[k]) / dt - dflux_m[k] - src[k];
    res_p[k] = (s2b[k] - s2a[k]) / dt + dflux_p[k] + src[k];
  }
  return {res_m, res_p};
}

PhysicalSnapshot resample(const PhysicalSnapshot& snap, const VecX& new_x) {
  PhysicalSnapshot out;
  out.time = snap.time;
  out.grid_x = new_x;
  const Eigen::Index n = new_x.size();
  out.n.resize(3, n);
  out.nt.resize(3, n);
  out.R.resize(3, n);
  out.S.resize(3, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Vec3 nn = interp_linear(snap.grid_x, snap.n, new_x[k]);
    nn.normalize();
    Vec3 R = interp_linear(snap.grid_x, snap.R, new_x[k]);
    Vec3 S = interp_linear(snap.grid_x, snap.S, new_x[k]);
    R -= nn.dot(R) * nn;
    S -= nn.dot(S) * nn;
    out.n.col(k) = nn;
    out.R.col(k) = R;
    out.S.col(k) = S;
    out.nt.col(k) = 0.5 * (R + S);
  }
  out.concentration = snap.concentration;
  return out;
}

}  // namespace nematic
