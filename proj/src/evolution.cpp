#include "bianchi4d/evolution.hpp"

#include <cmath>

#include "bianchi4d/errors.hpp"

namespace bianchi4d {

FrameState perturb_f1(FrameState state, double eps) {
  state.f[0] *= 1.0 + eps;
  state.df[0] *= 1.0 + eps;
  state.d2f[0] *= 1.0 + eps;
  return state;
}

std::string to_string(StructureKind kind) {
  return kind == StructureKind::HyperKahler ? "hk" : "hs";
}

StructureKind kind_from_string(const std::string& s) {
  if (s == "hk") return StructureKind::HyperKahler;
  if (s == "hs") return StructureKind::HyperSymplectic;
  throw UsageError("kind must be 'hk' or 'hs'");
}

EvolutionSystem reduce(const BianchiAlgebra& alg, StructureKind kind) {
  if (!admit_class_a(alg)) {
    throw UsageError("group " + to_string(alg.label) +
                     " is not unimodular; the construction requires Bianchi type A");
  }
  EvolutionSystem sys;
  sys.group = alg.label;
  sys.kind = kind;
  for (int i = 0; i < 3; ++i) sys.sigma[i] = static_cast<int>(std::lround(alg.b[i]));
  if (kind == StructureKind::HyperSymplectic) sys.sigma[2] = -sys.sigma[2];
  return sys;
}

bool sign_equivalent(const Eigen::Vector3i& a, const Eigen::Vector3i& b) {
  return a == b || a == Eigen::Vector3i(-b);
}

Eigen::Vector3i canonical_sigma(const Eigen::Vector3i& sigma, bool* flipped) {
  if (flipped) *flipped = false;
  for (int i = 0; i < 3; ++i) {
    if (sigma[i] > 0) return sigma;
    if (sigma[i] < 0) {
      if (flipped) *flipped = true;
      return -sigma;
    }
  }
  return sigma;
}

std::vector<CorrespondencePair> correspondence_table() {
  std::vector<CorrespondencePair> table;
  for (BianchiLabel g : class_a_labels()) {
    const EvolutionSystem hk = reduce(algebra_for(g), StructureKind::HyperKahler);
    for (BianchiLabel h : class_a_labels()) {
      const EvolutionSystem hs = reduce(algebra_for(h), StructureKind::HyperSymplectic);
      if (hk.sigma == hs.sigma) {
        table.push_back({g, h, false});
        break;
      }
      if (sign_equivalent(hk.sigma, hs.sigma)) {
        table.push_back({g, h, true});
        break;
      }
    }
  }
  return table;
}

WeightedSystem contraction_system(double lambda) {
  if (lambda < 0.0) throw UsageError("contraction parameter lambda must be >= 0");
  return {{lambda * lambda, 1.0, 1.0}};
}

Eigen::Vector3d residual(const WeightedSystem& sys, const FrameState& s) {
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double dprod = s.df[j] * s.f[k] + s.f[j] * s.df[k];
    r[i] = dprod - sys.w[i] * s.gauge * s.f[i];
  }
  return r;
}

Eigen::Vector3d residual(const EvolutionSystem& sys, const FrameState& s) {
  return residual(weighted(sys), s);
}

Eigen::Vector3d bgpp_residual(const FrameState& s) {
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double denom = 2.0 * s.f[j] * s.f[k];
    if (denom == 0.0) throw DomainError("BGPP form undefined where f_j f_k vanishes");
    r[i] = s.df[i] - s.gauge * (s.f[j] * s.f[j] + s.f[k] * s.f[k] - s.f[i] * s.f[i]) / denom;
  }
  return r;
}

Eigen::Vector3d derivatives_from_system(const WeightedSystem& sys, const Eigen::Vector3d& f,
                                        double gauge) {
  Eigen::Vector3d df;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double denom = 2.0 * f[j] * f[k];
    if (denom == 0.0) throw DomainError("derivative recovery undefined where f_j f_k vanishes");
    df[i] = gauge * (sys.w[j] * f[j] * f[j] + sys.w[k] * f[k] * f[k] - sys.w[i] * f[i] * f[i]) / denom;
  }
  return df;
}

}  // namespace bianchi4d
