#ifndef BIANCHI4D_GEOMETRY_HPP
#define BIANCHI4D_GEOMETRY_HPP

#include <Eigen/Core>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "bianchi4d/exterior.hpp"
#include "bianchi4d/frame.hpp"
#include "bianchi4d/solutions.hpp"

namespace bianchi4d {

/// Star conventions per structure kind: Riemannian data is positively
/// oriented, neutral data negatively; with both choices the fundamental
/// 2-forms are self-dual in the orthonormal frame.
SignatureSpec signature_for(StructureKind kind);

/// Frame metric diag(eta) in the theta-basis.
Eigen::Vector4d frame_eta(StructureKind kind);

/// Fundamental 2-forms in the invariant basis (e1,e2,e3,dt): coefficients
/// carry the f_i f_j and f_i f products of the evolving coframe.
std::array<KForm, 3> fundamental_forms(const FrameState& state);

/// The same three forms in the orthonormal theta-basis, where they are
/// constant with entries in {0, +-1}.
std::array<KForm, 3> fundamental_forms_theta(StructureKind kind);

/// diag(f1^2, f2^2, +-f3^2, +-f^2) in the (e1,e2,e3,dt) basis; the minus
/// signs appear for the neutral structure.
Eigen::Matrix4d frame_metric(const FrameState& state);

/// Exterior derivatives of the fundamental forms, assembled from the group's
/// structure constants plus the product-rule time part. Vanishes identically
/// exactly when the state solves its evolution system on a class A group;
/// for class B the spatial obstruction term appears with coefficient -2a.
std::array<KForm, 3> d_fundamental(const FrameState& state);

double max_abs(const std::array<KForm, 3>& forms);

/// Structure endomorphisms in the theta-basis: (J1,J2,J3) for the Riemannian
/// structure, (J,P1,P2) for the neutral one. Entries are exactly 0 or +-1.
/// The algebraic identities and metric compatibilities are verified on
/// construction.
struct StructureTriple {
  std::array<Eigen::Matrix4d, 3> endo;
  StructureKind kind{StructureKind::HyperKahler};
};

StructureTriple endomorphisms(const FrameState& state);

/// Largest deviation, over the triple, of the (para)quaternionic identities
/// and the metric (anti-)isometry conditions. Zero up to roundoff.
double endomorphism_identity_residual(const StructureTriple& triple);

/// Structure functions of the orthonormal frame:
///   d theta^a = 1/2 T^a_{bc} theta^b ^ theta^c,   [E_b,E_c] = -T^a_{bc} E_a,
/// together with their exact t-derivatives.
struct FrameStructure {
  double T[4][4][4]{};
  double dT[4][4][4]{};
};

FrameStructure frame_structure(const FrameState& state);

/// Nijenhuis tensor of one endomorphism of the triple, evaluated on all
/// pairs of frame fields. result[a][b] holds the components of N(E_a,E_b).
using NijenhuisComponents = std::array<std::array<Eigen::Vector4d, 4>, 4>;

NijenhuisComponents nijenhuis(const FrameState& state, const Eigen::Matrix4d& endo);

double max_abs(const NijenhuisComponents& n);

/// Coordinate realization of the invariant coframe for the groups the paper
/// writes charts for (IX, VIII, II, VII0, VI0 and the trivial I).
struct Chart {
  BianchiLabel label{BianchiLabel::I};
  std::array<std::string, 3> coord_names;
};

Chart chart_for(BianchiLabel label);

/// Row i gives e^i in the coordinate differentials of the chart.
Eigen::Matrix3d chart_matrix(const Chart& chart, const Eigen::Vector3d& coords);

/// Pullback of the frame metric through the chart; coordinate order
/// (t, c1, c2, c3).
Eigen::Matrix4d metric_in_coordinates(const FrameState& state, const Chart& chart,
                                      const Eigen::Vector3d& coords);

/// Strictly increasing change of time variable r = r(t) with derivative.
struct Reparam {
  std::function<double(double)> r;
  std::function<double(double)> dr;
};

struct CompanionSample {
  double t{}, r{}, phi{};
  Eigen::Vector4d g_diag;     // (f1^2, f2^2, f3^2, (f/r')^2) on (e1,e2,e3,dr)
  Eigen::Vector4d ghat_diag;  // ((f1/phi)^2, ..., 1) on (e1,e2,e3,dr)
  double guard_residual{};    // max |g - phi^2 ghat|, componentwise
};

/// Conformal companion ghat = dr^2 + sum (f_j/phi)^2 (e^j)^2 with
/// phi(r) dr = f dt, so that g = phi^2 ghat exactly at every sample.
std::vector<CompanionSample> conformal_companion(const SolutionFamily& family,
                                                 const Reparam& reparam,
                                                 const std::vector<double>& t_samples);

}  // namespace bianchi4d

#endif
