#include "nematic/initial_data.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "nematic/grid_utils.hpp"

namespace nematic {

std::pair<Vec3, Vec3> initial_riemann(const InitialData& data,
                                      const ModelParams& params, double x) {
  const Vec3 n0 = data.n0(x);
  Vec3 np;
  if (data.n0_prime) {
    np = data.n0_prime(x);
  } else {
    const double h = 1e-6 * (1.0 + std::abs(x));
    np = (data.n0(x + h) - data.n0(x - h)) / (2.0 * h);
  }
  const double c = wave_speed(params, n0[0]).c;
  const Vec3 nt = data.n1t(x);
  return {nt + c * np, nt - c * np};
}

double initial_energy(const InitialData& data, const ModelParams& params,
                      Eigen::Index n_points) {
  VecX xs = VecX::LinSpaced(n_points, data.support.lo, data.support.hi);
  VecX dens(n_points);
  for (Eigen::Index k = 0; k < n_points; ++k) {
    auto [R, S] = initial_riemann(data, params, xs[k]);
    dens[k] = R.squaredNorm() + S.squaredNorm();
  }
  return trapezoid(xs, dens);
}

PhysicalSnapshot initial_snapshot(const InitialData& data,
                                  const ModelParams& params, const VecX& xs) {
  PhysicalSnapshot snap;
  snap.time = 0.0;
  snap.grid_x = xs;
  const Eigen::Index n = xs.size();
  snap.n.resize(3, n);
  snap.nt.resize(3, n);
  snap.R.resize(3, n);
  snap.S.resize(3, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    auto [R, S] = initial_riemann(data, params, xs[k]);
    snap.n.col(k) = data.n0(xs[k]);
    snap.R.col(k) = R;
    snap.S.col(k) = S;
    snap.nt.col(k) = 0.5 * (R + S);
  }
  return snap;
}

InitialData sampled_initial_data(const VecX& xs, const Field3& n,
                                 const Field3& n_prime, const Field3& nt,
                                 Interval support, Vec3 background) {
  InitialData d;
  d.support = support;
  d.background = background;
  d.n0 = [xs, n, background](double x) -> Vec3 {
    if (x <= xs[0] || x >= xs[xs.size() - 1]) return background;
    return interp_linear(xs, n, x);
  };
  d.n0_prime = [xs, n_prime](double x) -> Vec3 {
    if (x <= xs[0] || x >= xs[xs.size() - 1]) return Vec3::Zero();
    return interp_linear(xs, n_prime, x);
  };
  d.n1t = [xs, nt](double x) -> Vec3 {
    if (x <= xs[0] || x >= xs[xs.size() - 1]) return Vec3::Zero();
    return interp_linear(xs, nt, x);
  };
  return d;
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

double bump(double u) {
  const double s = 1.0 - u * u;
  if (s <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / s);
}

double bump_derivative(double u) {
  const double s = 1.0 - u * u;
  if (s <= 0.0) return 0.0;
  return bump(u) * (-2.0 * u / (s * s));
}

namespace {

struct BumpProfile {
  double amp = 0.0, center = 0.0, halfwidth = 1.0;
  double operator()(double x) const {
    return amp * bump((x - center) / halfwidth);
  }
  double d(double x) const {
    return amp * bump_derivative((x - center) / halfwidth) / halfwidth;
  }
};

struct GreatCircleData {
  // n = cos(phi) e_u + sin(phi) e_w with e_u = (0,1,0),
  // e_w = (sin eta, 0, cos eta); velocity = psi * d n / d phi.
  double eta = 0.0;
  std::vector<BumpProfile> phi;   // summed rotation-angle bumps
  std::vector<BumpProfile> psi;   // summed angular-velocity bumps

  double phi_at(double x) const {
    double v = 0.0;
    for (const auto& b : phi) v += b(x);
    return v;
  }
  double dphi_at(double x) const {
    double v = 0.0;
    for (const auto& b : phi) v += b.d(x);
    return v;
  }
  double psi_at(double x) const {
    double v = 0.0;
    for (const auto& b : psi) v += b(x);
    return v;
  }

  InitialData to_data(Interval support) const {
    const Vec3 eu(0.0, 1.0, 0.0);
    const Vec3 ew(std::sin(eta), 0.0, std::cos(eta));
    GreatCircleData self = *this;
    InitialData d;
    d.support = support;
    d.background = eu;
    d.n0 = [self, eu, ew](double x) -> Vec3 {
      const double ph = self.phi_at(x);
      return std::cos(ph) * eu + std::sin(ph) * ew;
    };
    d.n0_prime = [self, eu, ew](double x) -> Vec3 {
      const double ph = self.phi_at(x);
      return self.dphi_at(x) * (-std::sin(ph) * eu + std::cos(ph) * ew);
    };
    d.n1t = [self, eu, ew](double x) -> Vec3 {
      const double ph = self.phi_at(x);
      return self.psi_at(x) * (-std::sin(ph) * eu + std::cos(ph) * ew);
    };
    return d;
  }
};

GreatCircleData fixture_profile(const std::string& id) {
  GreatCircleData g;
  if (id == "F1") {
    g.eta = 0.9;
    g.phi = {{0.5, -0.02, 0.22}};
    g.psi = {{1.2, 0.05, 0.18}};
  } else if (id == "F2") {
    g.eta = 1.5707963267948966;  // planar: e_w = (1,0,0), n3 == 0
    g.phi = {{1.0, 0.0, 0.12}};
    g.psi = {{5.0, 0.03, 0.10}};
  } else if (id == "F3") {
    g.eta = 1.2;
    g.phi = {{1.0, 0.0, 0.12}};
    g.psi = {{5.5, 0.02, 0.10}};
  } else {
    throw Error("ConfigError", "unknown fixture id '" + id + "'");
  }
  return g;
}

Interval fixture_support(const GreatCircleData& g) {
  double lo = 0.0, hi = 0.0;
  for (const auto* set : {&g.phi, &g.psi}) {
    for (const auto& b : *set) {
      lo = std::min(lo, b.center - b.halfwidth);
      hi = std::max(hi, b.center + b.halfwidth);
    }
  }
  return {lo, hi};
}

}  // namespace

InitialData fixture(const std::string& id) {
  const GreatCircleData g = fixture_profile(id);
  return g.to_data(fixture_support(g));
}

InitialData perturbed_fixture(const std::string& id, double eps) {
  GreatCircleData g = fixture_profile(id);
  g.phi.push_back({eps, 0.08, 0.10});
  g.psi.push_back({0.5 * eps, -0.06, 0.12});
  return g.to_data(fixture_support(g));
}

InitialData random_data(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> amp(0.2, 0.8);
  std::uniform_real_distribution<double> cen(-0.10, 0.10);
  std::uniform_real_distribution<double> wid(0.08, 0.16);
  std::uniform_real_distribution<double> ang(0.6, 1.3);
  std::uniform_real_distribution<double> vel(0.5, 2.0);
  GreatCircleData g;
  g.eta = ang(rng);
  for (int k = 0; k < 2; ++k) g.phi.push_back({amp(rng), cen(rng), wid(rng)});
  g.psi.push_back({vel(rng), cen(rng), wid(rng)});
  return g.to_data(fixture_support(g));
}

InitialData random_pair_b(unsigned seed, double eps) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> amp(0.2, 0.8);
  std::uniform_real_distribution<double> cen(-0.10, 0.10);
  std::uniform_real_distribution<double> wid(0.08, 0.16);
  std::uniform_real_distribution<double> ang(0.6, 1.3);
  std::uniform_real_distribution<double> vel(0.5, 2.0);
  GreatCircleData g;
  g.eta = ang(rng);
  for (int k = 0; k < 2; ++k) g.phi.push_back({amp(rng), cen(rng), wid(rng)});
  g.psi.push_back({vel(rng), cen(rng), wid(rng)});
  // Perturbation drawn from the same stream keeps pairs reproducible.
  g.phi.push_back({eps * amp(rng), cen(rng), wid(rng)});
  g.psi.push_back({eps * vel(rng), cen(rng), wid(rng)});
  return g.to_data(fixture_support(g));
}

InitialData linear_rs_path(const InitialData& a, const InitialData& b,
                           double lambda, const ModelParams& params,
                           Eigen::Index n_points) {
  const Interval support{std::min(a.support.lo, b.support.lo),
                         std::max(a.support.hi, b.support.hi)};
  if ((a.background - b.background).norm() > 1e-12) {
    throw Error("GridMismatch",
                "linear_rs_path requires a shared background state");
  }
  VecX xs = VecX::LinSpaced(n_points, support.lo, support.hi);
  Field3 R(3, n_points), S(3, n_points);
  for (Eigen::Index k = 0; k < n_points; ++k) {
    auto [Ra, Sa] = initial_riemann(a, params, xs[k]);
    auto [Rb, Sb] = initial_riemann(b, params, xs[k]);
    R.col(k) = (1.0 - lambda) * Ra + lambda * Rb;
    S.col(k) = (1.0 - lambda) * Sa + lambda * Sb;
  }

  // Recover the director by integrating n' = (R-S)/(2 c(n1)) from the left
  // constant state (RK4, field values linearly interpolated).
  auto slope = [&](double x, const Vec3& n) -> Vec3 {
    const Vec3 dR = interp_linear(xs, R, x);
    const Vec3 dS = interp_linear(xs, S, x);
    const double n1 = std::clamp(n[0], -1.0, 1.0);
    return (dR - dS) / (2.0 * wave_speed(params, n1).c);
  };
  Field3 n(3, n_points), nprime(3, n_points), nt(3, n_points);
  Vec3 cur = a.background;
  double drift = 0.0;
  for (Eigen::Index k = 0; k < n_points; ++k) {
    if (k > 0) {
      const double x0 = xs[k - 1], h = xs[k] - xs[k - 1];
      const Vec3 k1 = slope(x0, cur);
      const Vec3 k2 = slope(x0 + 0.5 * h, cur + 0.5 * h * k1);
      const Vec3 k3 = slope(x0 + 0.5 * h, cur + 0.5 * h * k2);
      const Vec3 k4 = slope(x0 + h, cur + h * k3);
      cur += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    drift = std::max(drift, std::abs(cur.norm() - 1.0));
    Vec3 nk = cur.normalized();
    const double c = wave_speed(params, std::clamp(nk[0], -1.0, 1.0)).c;
    Vec3 np = (R.col(k) - S.col(k)) / (2.0 * c);
    Vec3 v = 0.5 * (R.col(k) + S.col(k));
    np -= nk.dot(np) * nk;
    v -= nk.dot(v) * nk;
    n.col(k) = nk;
    nprime.col(k) = np;
    nt.col(k) = v;
  }

  InitialData out =
      sampled_initial_data(xs, n, nprime, nt, support, a.background);
  out.unit_drift = drift;
  return out;
}

}  // namespace nematic
