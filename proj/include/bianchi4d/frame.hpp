#ifndef BIANCHI4D_FRAME_HPP
#define BIANCHI4D_FRAME_HPP

#include <Eigen/Core>
#include <string>

#include "bianchi4d/bianchi.hpp"

namespace bianchi4d {

/// Which of the two constructions the data belongs to. HyperKahler gives a
/// Riemannian metric, HyperSymplectic a neutral (2,2) one.
enum class StructureKind { HyperKahler, HyperSymplectic };

std::string to_string(StructureKind kind);            // "hk" / "hs"
StructureKind kind_from_string(const std::string& s);

/// Snapshot of the diagonal evolution at a single time: the coefficients
/// (f1,f2,f3) of the invariant coframe, the lapse f, and enough derivative
/// data for curvature. The orthonormal coframe is
///   theta^i = f_i e^i,  theta^4 = f dt.
struct FrameState {
  double t{0.0};
  Eigen::Vector3d f{1.0, 1.0, 1.0};
  double gauge{1.0};
  Eigen::Vector3d df{0.0, 0.0, 0.0};
  Eigen::Vector3d d2f{0.0, 0.0, 0.0};
  double dgauge{0.0};
  StructureKind kind{StructureKind::HyperKahler};
  BianchiAlgebra algebra;

  bool valid() const {
    return f[0] != 0.0 && f[1] != 0.0 && f[2] != 0.0 && gauge != 0.0;
  }
};

/// Multiplies f1 and its derivatives by (1 + eps): a deliberate violation of
/// the evolution equations used as a positive control.
FrameState perturb_f1(FrameState state, double eps);

}  // namespace bianchi4d

#endif
