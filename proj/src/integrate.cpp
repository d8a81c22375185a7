#include "bianchi4d/integrate.hpp"

#include <cmath>

#include "bianchi4d/errors.hpp"

namespace bianchi4d {

namespace {

// f_i = s_i sqrt(u_j u_k / u_i); fails when a ratio is not positive.
bool recover_f(const Eigen::Vector3d& u, const Eigen::Vector3d& signs, Eigen::Vector3d& f) {
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double ratio = u[j] * u[k] / u[i];
    if (!(ratio > 0.0) || !std::isfinite(ratio)) return false;
    f[i] = signs[i] * std::sqrt(ratio);
  }
  return true;
}

}  // namespace

Trajectory integrate(const WeightedSystem& sys, const std::function<double(double)>& gauge,
                     const Eigen::Vector3d& f0, double t0, double t1, double step) {
  if (!(step > 0.0)) throw UsageError("integration step must be positive");
  if (f0[0] == 0.0 || f0[1] == 0.0 || f0[2] == 0.0)
    throw UsageError("initial frame coefficients must be nonzero");

  Eigen::Vector3d u;
  Eigen::Vector3d signs;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    u[i] = f0[j] * f0[k];
    signs[i] = f0[i] > 0.0 ? 1.0 : -1.0;
  }

  const double dir = t1 >= t0 ? 1.0 : -1.0;
  const double h = dir * step;
  const double span = std::abs(t1 - t0);
  const long n_full = static_cast<long>(std::floor(span / step + 1e-12));
  const double tail = span - static_cast<double>(n_full) * step;

  bool ok = true;
  auto rhs = [&](double t, const Eigen::Vector3d& uu) -> Eigen::Vector3d {
    Eigen::Vector3d f;
    if (!recover_f(uu, signs, f)) {
      ok = false;
      return Eigen::Vector3d::Zero();
    }
    const double g = gauge(t);
    if (!std::isfinite(g)) {
      ok = false;
      return Eigen::Vector3d::Zero();
    }
    return sys.w.cwiseProduct(f) * g;
  };

  Trajectory out;
  Eigen::Vector3d f = f0;
  double t = t0;
  out.samples.push_back({t, f, gauge(t)});

  auto step_once = [&](double hh) -> bool {
    ok = true;
    const Eigen::Vector3d k1 = rhs(t, u);
    const Eigen::Vector3d k2 = rhs(t + 0.5 * hh, u + 0.5 * hh * k1);
    const Eigen::Vector3d k3 = rhs(t + 0.5 * hh, u + 0.5 * hh * k2);
    const Eigen::Vector3d k4 = rhs(t + hh, u + hh * k3);
    if (!ok) return false;
    const Eigen::Vector3d u_next = u + (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    Eigen::Vector3d f_next;
    for (int i = 0; i < 3; ++i) {
      // A product must not reach or cross zero: that is the domain boundary.
      if (!(u_next[i] * u[i] > 0.0)) return false;
    }
    if (!recover_f(u_next, signs, f_next)) return false;
    u = u_next;
    f = f_next;
    t += hh;
    return true;
  };

  for (long s = 0; s < n_full; ++s) {
    if (!step_once(h)) {
      out.reason = StopReason::BoundaryHit;
      return out;
    }
    out.samples.push_back({t, f, gauge(t)});
  }
  if (tail > 1e-12 * std::max(1.0, span)) {
    if (!step_once(dir * tail)) {
      out.reason = StopReason::BoundaryHit;
      return out;
    }
    out.samples.push_back({t, f, gauge(t)});
  }
  out.reason = StopReason::Completed;
  return out;
}

Trajectory integrate(const EvolutionSystem& sys, const std::function<double(double)>& gauge,
                     const Eigen::Vector3d& f0, double t0, double t1, double step) {
  return integrate(weighted(sys), gauge, f0, t0, t1, step);
}

}  // namespace bianchi4d
