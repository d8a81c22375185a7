#ifndef BIANCHI4D_INTEGRATE_HPP
#define BIANCHI4D_INTEGRATE_HPP

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "bianchi4d/evolution.hpp"

namespace bianchi4d {

struct TrajectorySample {
  double t{};
  Eigen::Vector3d f;
  double gauge{};
};

enum class StopReason { Completed, BoundaryHit };

struct Trajectory {
  std::vector<TrajectorySample> samples;  // includes the initial state
  StopReason reason{StopReason::Completed};
};

/// Classical fixed-step RK4 on the product variables u_i = f_j f_k, where
/// the system is first order:  u_i' = w_i f(t) f_i,  f_i recovered from u by
/// f_i = s_i sqrt(u_j u_k / u_i) with the sign pattern s frozen at the start.
/// Integration runs from t0 to t1 (either direction). If any u_i reaches or
/// crosses zero the trajectory stops at the last valid state with
/// StopReason::BoundaryHit.
Trajectory integrate(const WeightedSystem& sys, const std::function<double(double)>& gauge,
                     const Eigen::Vector3d& f0, double t0, double t1, double step);

Trajectory integrate(const EvolutionSystem& sys, const std::function<double(double)>& gauge,
                     const Eigen::Vector3d& f0, double t0, double t1, double step);

}  // namespace bianchi4d

#endif
