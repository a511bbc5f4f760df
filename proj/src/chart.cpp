#include "nematic/chart.hpp"

#include <cmath>
#include <string>

#include "nematic/grid_utils.hpp"

namespace nematic {

double constraint_residual(const ChartState& u) {
  double r = std::abs(u.l.squaredNorm() - u.h1 * (1.0 - u.h1));
  r = std::max(r, std::abs(u.m.squaredNorm() - u.h2 * (1.0 - u.h2)));
  r = std::max(r, std::abs(u.n.norm() - 1.0));
  r = std::max(r, std::abs(u.n.dot(u.l)));
  r = std::max(r, std::abs(u.n.dot(u.m)));
  return r;
}

SemilinearRhs semilinear_rhs(const ChartState& u, const ModelParams& params) {
  const WaveSpeed w = wave_speed(params, u.n[0]);
  const double c = w.c, cp = w.c_prime;
  const double c2 = c * c, c3 = c2 * c;
  const double lm = u.l.dot(u.m);
  const double hh = u.h1 + u.h2 - 2.0 * u.h1 * u.h2;
  const Vec3 zeta(params.gamma, params.alpha, params.alpha);

  SemilinearRhs r;
  for (int i = 0; i < 3; ++i) {
    const double theta =
        (c2 - zeta[i]) * hh - 2.0 * (3.0 * c2 - zeta[i]) * lm;
    r.l_Y[i] = u.q / (8.0 * c3) * theta * u.n[i] +
               cp / (4.0 * c2) * u.l[0] * u.q * (u.l[i] - u.m[i]);
    r.m_X[i] = u.p / (8.0 * c3) * theta * u.n[i] -
               cp / (4.0 * c2) * u.m[0] * u.p * (u.l[i] - u.m[i]);
  }
  r.n_Y = u.q / (2.0 * c) * u.m;
  r.n_X_alt = u.p / (2.0 * c) * u.l;
  r.h1_Y = cp / (4.0 * c2) * u.q * u.l[0] * (u.h1 - u.h2);
  r.h2_X = cp / (4.0 * c2) * u.p * u.m[0] * (u.h2 - u.h1);
  r.p_Y = -cp / (4.0 * c2) * u.p * u.q * (u.l[0] - u.m[0]);
  r.q_X = -r.p_Y;
  r.t_X = u.p * u.h1 / (2.0 * c);
  r.t_Y = u.q * u.h2 / (2.0 * c);
  r.x_X = 0.5 * u.p * u.h1;
  r.x_Y = -0.5 * u.q * u.h2;
  return r;
}

BoundaryCurve boundary_data(const InitialData& data, const ModelParams& params,
                            const VecX& xs) {
  const Eigen::Index n = xs.size();
  BoundaryCurve curve;
  curve.parameter = xs;
  curve.states.resize(static_cast<size_t>(n));
  curve.params = params;

  // Director derivative: analytic when the datum provides one, centered
  // differences on the grid otherwise.
  Field3 nprime(3, n);
  if (data.n0_prime) {
    for (Eigen::Index k = 0; k < n; ++k) nprime.col(k) = data.n0_prime(xs[k]);
  } else {
    Field3 n0s(3, n);
    for (Eigen::Index k = 0; k < n; ++k) n0s.col(k) = data.n0(xs[k]);
    nprime = gradient(xs, n0s);
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    const Vec3 n0 = data.n0(xs[k]);
    const double unit = std::abs(n0.norm() - 1.0);
    if (unit > kUnitNormTol) {
      throw Error("UnitNormViolation",
                  "boundary_data: | |n0|-1 | = " + std::to_string(unit) +
                      " at x = " + std::to_string(xs[k]));
    }
    if (!nprime.col(k).allFinite()) {
      throw Error("NonFiniteDerivative",
                  "boundary_data: n0' not finite at x = " +
                      std::to_string(xs[k]));
    }
    const double c = wave_speed(params, n0[0]).c;
    const Vec3 R = data.n1t(xs[k]) + c * nprime.col(k);
    const Vec3 S = data.n1t(xs[k]) - c * nprime.col(k);

    ChartState u;
    u.n = n0;
    u.h1 = 1.0 / (1.0 + R.squaredNorm());
    u.h2 = 1.0 / (1.0 + S.squaredNorm());
    u.l = R * u.h1;
    u.m = S * u.h2;
    u.p = 1.0 + R.squaredNorm();
    u.q = 1.0 + S.squaredNorm();
    u.x = xs[k];
    u.t = 0.0;
    curve.states[static_cast<size_t>(k)] = u;
  }
  return curve;
}

}  // namespace nematic
