#pragma once

#include <vector>

#include "nematic/initial_data.hpp"
#include "nematic/model.hpp"
#include "nematic/types.hpp"

namespace nematic {

inline constexpr double kAlgebraTol = 1e-7;  // constraint residual tolerance

/// State of the transformed system at one point of the characteristic
/// (X,Y) plane. l and m are the bounded images R/(1+|R|^2), S/(1+|S|^2);
/// h1, h2 the energy gauges 1/(1+|R|^2), 1/(1+|S|^2); p, q the label
/// densities of the two characteristic families; (x, t) the physical image.
struct ChartState {
  Vec3 n = Vec3::Zero();
  Vec3 l = Vec3::Zero();
  Vec3 m = Vec3::Zero();
  double h1 = 1.0;
  double h2 = 1.0;
  double p = 1.0;
  double q = 1.0;
  double x = 0.0;
  double t = 0.0;
};

/// Worst algebraic constraint residual of a state:
/// | |l|^2 - h1(1-h1) |, | |m|^2 - h2(1-h2) |, | |n|-1 |, |n.l|, |n.m|.
double constraint_residual(const ChartState& u);

/// Right-hand sides of the semilinear system. Fields split by the direction
/// they march in: (l, n, h1, p) along +Y, (m, h2, q) along +X; x and t have
/// both derivatives. n_X_alt is the redundant +X form of the director
/// equation, kept as a cross-check.
struct SemilinearRhs {
  Vec3 l_Y = Vec3::Zero();
  Vec3 n_Y = Vec3::Zero();
  double h1_Y = 0.0;
  double p_Y = 0.0;
  Vec3 m_X = Vec3::Zero();
  double h2_X = 0.0;
  double q_X = 0.0;
  double t_X = 0.0, t_Y = 0.0, x_X = 0.0, x_Y = 0.0;
  Vec3 n_X_alt = Vec3::Zero();
};

SemilinearRhs semilinear_rhs(const ChartState& u, const ModelParams& params);

/// Data curve in the (X,Y) plane: states assigned at (X,Y) = (x,-x).
/// Carries the model parameters it was built with; the solver integrates
/// with the same ones.
struct BoundaryCurve {
  VecX parameter;                 // x-values along the curve
  std::vector<ChartState> states;
  ModelParams params;
};

/// Boundary states from initial data: evaluates the Riemann variables
/// R = n1t + c n0', S = n1t - c n0' on the given grid and transforms them.
/// The derivative comes from the data's analytic derivative when present,
/// otherwise centered differences on the grid.
BoundaryCurve boundary_data(const InitialData& data, const ModelParams& params,
                            const VecX& xs);

}  // namespace nematic
