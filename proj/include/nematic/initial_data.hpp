#pragma once

#include <functional>
#include <string>
#include <utility>

#include "nematic/model.hpp"
#include "nematic/state.hpp"
#include "nematic/types.hpp"

namespace nematic {

/// Initial datum (n0, n1t) of the wave system. The director n0 is unit
/// valued; data equal the constant background state outside `support`.
/// n0_prime may be empty, in which case consumers difference n0 themselves.
struct InitialData {
  std::function<Vec3(double)> n0;
  std::function<Vec3(double)> n0_prime;
  std::function<Vec3(double)> n1t;
  Interval support{0.0, 0.0};
  Vec3 background = Vec3(0.0, 1.0, 0.0);
  // Max | |n|-1 | removed by renormalization when the datum was synthesized
  // from a Riemann-variable path (zero for analytic fixtures).
  double unit_drift = 0.0;
};

/// R,S of a datum at one point.
std::pair<Vec3, Vec3> initial_riemann(const InitialData& data,
                                      const ModelParams& params, double x);

/// Total energy int(|R|^2+|S|^2) dx by trapezoid quadrature over the support
/// at the given resolution.
double initial_energy(const InitialData& data, const ModelParams& params,
                      Eigen::Index n_points);

/// Snapshot of a datum on a grid (time 0).
PhysicalSnapshot initial_snapshot(const InitialData& data,
                                  const ModelParams& params, const VecX& xs);

/// Wraps sampled arrays as an InitialData (linear interpolation between
/// samples; derivative supplied explicitly or differenced).
InitialData sampled_initial_data(const VecX& xs, const Field3& n,
                                 const Field3& n_prime, const Field3& nt,
                                 Interval support, Vec3 background);

// ---------------------------------------------------------------------------
// Built-in fixtures. All director profiles traverse a great-circle arc
//   n(x) = cos(phi(x)) e2 + sin(phi(x)) (sin(eta), 0, cos(eta)),
// with phi a C-infinity bump of compact support, so every datum is constant
// outside a finite interval. The velocity is tangent to the same circle.
// Formula constants live in fixtures.cpp; nothing here is a reference value.
// ---------------------------------------------------------------------------

/// C-infinity bump: exp(1 - 1/(1-u^2)) on |u|<1, zero outside.
double bump(double u);
double bump_derivative(double u);

/// F1: smooth rotation, stays smooth well past the default run horizon.
/// F2: planar variant (third component identically zero), steep enough to
///     form a cusp inside the default horizon.
/// F3: steep-gradient variant of F1, forms a cusp inside the default horizon.
InitialData fixture(const std::string& id);

/// Returns the fixture datum with an epsilon-scaled smooth bump added to the
/// rotation angle and the angular velocity (compact support, same circle).
InitialData perturbed_fixture(const std::string& id, double eps);

/// Deterministic random smooth datum (seeded); used for property sweeps.
InitialData random_data(unsigned seed);

/// Second element of a random pair: `random_data(seed)` plus a small random
/// smooth perturbation drawn from `seed`.
InitialData random_pair_b(unsigned seed, double eps);

// ---------------------------------------------------------------------------
// Linear path in the Riemann variables between two data sets (the upper-bound
// path of the Sobolev comparison): R^lam = (1-lam) R_A + lam R_B and likewise
// for S. The director along the path solves n_x = (R-S)/(2c(n1)) from the
// left constant state and is renormalized; n_t is the tangent projection of
// (R+S)/2. Both data must share the background state.
// ---------------------------------------------------------------------------
InitialData linear_rs_path(const InitialData& a, const InitialData& b,
                           double lambda, const ModelParams& params,
                           Eigen::Index n_points = 2048);

}  // namespace nematic
