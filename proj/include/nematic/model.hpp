#pragma once

#include <algorithm>
#include <cmath>

#include "nematic/types.hpp"

namespace nematic {

/// Elastic constants of the planar-director wave system and the derived
/// wave-speed bounds. alpha and gamma must be positive and distinct; the
/// equal-constant case degenerates to a constant-speed semilinear wave
/// equation and is rejected.
struct ModelParams {
  double alpha = 0.0;
  double gamma = 0.0;
  double c0 = 0.0;  // sqrt(min(alpha, gamma)), lower speed bound
  double c1 = 0.0;  // sqrt(max(alpha, gamma)), upper speed bound
};

/// Speed c(n1) together with its first two derivatives in n1.
struct WaveSpeed {
  double c = 0.0;
  double c_prime = 0.0;
  double c_second = 0.0;
};

inline ModelParams validate_params(double alpha, double gamma) {
  if (!(alpha > 0.0) || !(gamma > 0.0)) {
    throw Error("NonPositiveConstant",
                "elastic constants must be positive, got alpha=" +
                    std::to_string(alpha) + " gamma=" + std::to_string(gamma));
  }
  if (alpha == gamma) {
    throw Error("DegenerateSpeed",
                "alpha == gamma gives a constant wave speed; this model "
                "requires alpha != gamma");
  }
  ModelParams p;
  p.alpha = alpha;
  p.gamma = gamma;
  p.c0 = std::sqrt(std::min(alpha, gamma));
  p.c1 = std::sqrt(std::max(alpha, gamma));
  return p;
}

// |n1| may exceed 1 by roundoff from upstream arithmetic; anything past this
// tolerance is a genuine constraint violation.
inline constexpr double kUnitClampTol = 1e-9;

/// c^2(n1) = alpha + (gamma - alpha) n1^2, with
/// c' = (gamma - alpha) n1 / c and c'' = (gamma - alpha)(c - n1 c') / c^2.
inline WaveSpeed wave_speed(const ModelParams& p, double n1) {
  const double a = std::abs(n1);
  if (a > 1.0 + kUnitClampTol) {
    throw Error("OutOfRange",
                "wave_speed: |n1| = " + std::to_string(a) + " exceeds 1");
  }
  n1 = std::clamp(n1, -1.0, 1.0);
  const double d = p.gamma - p.alpha;
  WaveSpeed w;
  w.c = std::sqrt(p.alpha + d * n1 * n1);
  w.c_prime = d * n1 / w.c;
  w.c_second = d * (w.c - n1 * w.c_prime) / (w.c * w.c);
  return w;
}

}  // namespace nematic
