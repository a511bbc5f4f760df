#pragma once

#include <cmath>

#include "nematic/types.hpp"

namespace nematic {

/// Trapezoid weights for a (possibly non-uniform) increasing grid.
inline VecX trapezoid_weights(const VecX& xs) {
  const Eigen::Index n = xs.size();
  VecX w = VecX::Zero(n);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    const double dx = xs[k + 1] - xs[k];
    w[k] += 0.5 * dx;
    w[k + 1] += 0.5 * dx;
  }
  return w;
}

inline double trapezoid(const VecX& xs, const VecX& f) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k + 1 < xs.size(); ++k) {
    acc += 0.5 * (f[k] + f[k + 1]) * (xs[k + 1] - xs[k]);
  }
  return acc;
}

/// Running integral F(x_k) = int_{x_0}^{x_k} f, trapezoid rule.
inline VecX cumulative_trapezoid(const VecX& xs, const VecX& f) {
  VecX F = VecX::Zero(xs.size());
  for (Eigen::Index k = 0; k + 1 < xs.size(); ++k) {
    F[k + 1] = F[k] + 0.5 * (f[k] + f[k + 1]) * (xs[k + 1] - xs[k]);
  }
  return F;
}

/// Index i with xs[i] <= x <= xs[i+1], clamped to the grid range.
inline Eigen::Index bracket_index(const VecX& xs, double x) {
  const Eigen::Index n = xs.size();
  if (n < 2 || x <= xs[0]) return 0;
  if (x >= xs[n - 1]) return n - 2;
  Eigen::Index lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const Eigen::Index mid = (lo + hi) / 2;
    (xs[mid] <= x ? lo : hi) = mid;
  }
  return lo;
}

/// Piecewise-linear interpolation with constant extrapolation.
inline double interp_linear(const VecX& xs, const VecX& f, double x) {
  const Eigen::Index i = bracket_index(xs, x);
  const double dx = xs[i + 1] - xs[i];
  if (dx <= 0.0) return f[i];
  const double a = std::clamp((x - xs[i]) / dx, 0.0, 1.0);
  return (1.0 - a) * f[i] + a * f[i + 1];
}

inline Vec3 interp_linear(const VecX& xs, const Field3& f, double x) {
  const Eigen::Index i = bracket_index(xs, x);
  const double dx = xs[i + 1] - xs[i];
  if (dx <= 0.0) return f.col(i);
  const double a = std::clamp((x - xs[i]) / dx, 0.0, 1.0);
  return (1.0 - a) * f.col(i) + a * f.col(i + 1);
}

/// Centered first derivative on a non-uniform grid (one-sided at the ends).
inline VecX gradient(const VecX& xs, const VecX& f) {
  const Eigen::Index n = xs.size();
  VecX g(n);
  if (n == 1) {
    g[0] = 0.0;
    return g;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index a = (k == 0) ? 0 : k - 1;
    const Eigen::Index b = (k == n - 1) ? n - 1 : k + 1;
    g[k] = (f[b] - f[a]) / (xs[b] - xs[a]);
  }
  return g;
}

inline Field3 gradient(const VecX& xs, const Field3& f) {
  const Eigen::Index n = xs.size();
  Field3 g(3, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index a = (k == 0) ? 0 : k - 1;
    const Eigen::Index b = (k == n - 1) ? n - 1 : k + 1;
    g.col(k) = (f.col(b) - f.col(a)) / (xs[b] - xs[a]);
  }
  return g;
}

}  // namespace nematic
