#ifndef BIANCHI4D_EVOLUTION_HPP
#define BIANCHI4D_EVOLUTION_HPP

#include <Eigen/Core>
#include <vector>

#include "bianchi4d/bianchi.hpp"
#include "bianchi4d/frame.hpp"

namespace bianchi4d {

/// Reduced evolution system for a diagonal coframe evolution:
///   d/dt (f_j f_k) = sigma_i * f * f_i,   (i,j,k) cyclic.
/// For hyper-Kahler data sigma = (b1,b2,b3); for hyper-symplectic data
/// sigma = (b1,b2,-b3). Either is determined by the group alone.
struct EvolutionSystem {
  Eigen::Vector3i sigma{0, 0, 0};
  BianchiLabel group{BianchiLabel::I};
  StructureKind kind{StructureKind::HyperKahler};
};

/// Builds the system for a class A algebra. Rejects class B: the closedness
/// seed condition fails there for every invertible frame.
EvolutionSystem reduce(const BianchiAlgebra& alg, StructureKind kind);

/// sigma and -sigma describe the same family of solutions: negating any one
/// of f1, f2, f3 or the lapse f negates all three coefficients.
bool sign_equivalent(const Eigen::Vector3i& a, const Eigen::Vector3i& b);

/// Canonical representative of a sign class: first nonzero entry positive.
/// `flipped`, when given, reports whether the input was negated.
Eigen::Vector3i canonical_sigma(const Eigen::Vector3i& sigma, bool* flipped = nullptr);

struct CorrespondencePair {
  BianchiLabel hk_group;
  BianchiLabel hs_group;
  bool up_to_sign;  // matched only after sigma -> -sigma
};

/// For each class A group, the group whose hyper-symplectic system coincides
/// with its hyper-Kahler one. Computed by comparing reduce() outputs.
std::vector<CorrespondencePair> correspondence_table();

/// Real-weighted generalization d/dt (f_j f_k) = w_i * f * f_i, used by the
/// contraction family; an EvolutionSystem embeds via sigma.cast<double>().
struct WeightedSystem {
  Eigen::Vector3d w{0.0, 0.0, 0.0};
};

inline WeightedSystem weighted(const EvolutionSystem& sys) {
  return {sys.sigma.cast<double>()};
}

/// One-parameter rescaling of the (1,1,1) system with right-hand sides
/// (f3, f2, lambda^2 f1) and lapse 1: weights (lambda^2, 1, 1).
WeightedSystem contraction_system(double lambda);

/// Componentwise d/dt(f_j f_k) - w_i f f_i from the state's values and first
/// derivatives (product rule on the supplied df).
Eigen::Vector3d residual(const WeightedSystem& sys, const FrameState& state);
Eigen::Vector3d residual(const EvolutionSystem& sys, const FrameState& state);

/// Residual of the equivalent first-order form of the (1,1,1) system:
///   f_i' - f (f_j^2 + f_k^2 - f_i^2) / (2 f_j f_k).
Eigen::Vector3d bgpp_residual(const FrameState& state);

/// First derivatives determined by the evolution system itself:
///   f_i' = f (w_j f_j^2 + w_k f_k^2 - w_i f_i^2) / (2 f_j f_k).
Eigen::Vector3d derivatives_from_system(const WeightedSystem& sys, const Eigen::Vector3d& f,
                                        double gauge);

}  // namespace bianchi4d

#endif
