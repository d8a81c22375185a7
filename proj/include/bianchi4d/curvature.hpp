#ifndef BIANCHI4D_CURVATURE_HPP
#define BIANCHI4D_CURVATURE_HPP

#include <Eigen/Core>
#include <array>
#include <utility>

#include "bianchi4d/exterior.hpp"
#include "bianchi4d/geometry.hpp"

namespace bianchi4d {

/// Levi-Civita connection in the orthonormal theta-frame, solved from the
/// torsion-free metric-compatible first structure equation. All coefficients
/// are functions of t alone; their exact t-derivatives ride along so the
/// second structure equation needs no numerical differentiation.
struct ConnectionForms {
  double gamma[4][4][4]{};   // Gamma^a_{bc}: omega^a_b = Gamma^a_{bc} theta^c
  double dgamma[4][4][4]{};  // d/dt Gamma^a_{bc}
  Eigen::Vector4d eta;
  double gauge{};            // dt = theta^4 / gauge
  FrameStructure structure;

  KForm omega(int a, int b) const;   // omega^a_b as a 1-form
  KForm dtheta(int a) const;         // d theta^a as a 2-form
};

ConnectionForms connection(const FrameState& state);

/// Curvature 2-forms Omega^a_b = d omega^a_b + omega^a_c ^ omega^c_b.
std::array<std::array<KForm, 4>, 4> curvature_forms(const ConnectionForms& conn);

/// Fully lowered frame components R_{abcd} together with eta.
struct RiemannTensor {
  double R[4][4][4][4]{};
  Eigen::Vector4d eta;
};

RiemannTensor riemann(const FrameState& state);

Eigen::Matrix4d ricci(const RiemannTensor& rm);
Eigen::Matrix4d ricci(const FrameState& state);

double scalar_curvature(const RiemannTensor& rm);

/// Frobenius norm over all (lowered) components.
double riemann_norm(const RiemannTensor& rm);

/// Weyl part of the curvature as an operator on 2-forms, split into its
/// self-dual and anti-self-dual blocks under the state's orientation;
/// returns the Frobenius norms (SD, ASD).
std::pair<double, double> weyl_split(const FrameState& state);
std::pair<double, double> weyl_split(const RiemannTensor& rm, const SignatureSpec& sig);

/// Largest |R_{abcd} - R_{cdab}|; an engine self-check.
double pair_symmetry_residual(const RiemannTensor& rm);

/// Per-sample certification record.
struct CurvatureReport {
  double t{};
  double ricci_max_abs{};
  double riemann_norm{};
  double weyl_sd_norm{};
  double weyl_asd_norm{};
  double dF_max_abs{};
};

CurvatureReport curvature_report(const FrameState& state);

}  // namespace bianchi4d

#endif
