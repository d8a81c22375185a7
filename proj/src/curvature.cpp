#include "bianchi4d/curvature.hpp"

#include <cmath>

#include "bianchi4d/errors.hpp"

namespace bianchi4d {

KForm ConnectionForms::omega(int a, int b) const {
  KForm w(1);
  for (int c = 0; c < 4; ++c) {
    if (gamma[a][b][c] != 0.0) w.add_term({c + 1}, gamma[a][b][c]);
  }
  return w;
}

KForm ConnectionForms::dtheta(int a) const {
  KForm f(2);
  for (int b = 0; b < 4; ++b)
    for (int c = b + 1; c < 4; ++c) {
      if (structure.T[a][b][c] != 0.0) f.add_term({b + 1, c + 1}, structure.T[a][b][c]);
    }
  return f;
}

ConnectionForms connection(const FrameState& state) {
  if (!state.valid()) throw DomainError("singular frame: all of f1,f2,f3,f must be nonzero");
  ConnectionForms conn;
  conn.eta = frame_eta(state.kind);
  conn.gauge = state.gauge;
  conn.structure = frame_structure(state);

  // Lower the upper index, value and derivative channels alike.
  double Tl[4][4][4], dTl[4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Tl[a][b][c] = conn.eta[a] * conn.structure.T[a][b][c];
        dTl[a][b][c] = conn.eta[a] * conn.structure.dT[a][b][c];
      }

  // Koszul resolution of dtheta^a = -omega^a_b ^ theta^b with omega_{ab}
  // antisymmetric after lowering:
  //   Gamma_{abc} = (T_{bc,a} + T_{ba,c} - T_{ac,b}) / 2.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const double low = 0.5 * (Tl[a][b][c] + Tl[c][b][a] - Tl[b][a][c]);
        const double dlow = 0.5 * (dTl[a][b][c] + dTl[c][b][a] - dTl[b][a][c]);
        conn.gamma[a][b][c] = conn.eta[a] * low;
        conn.dgamma[a][b][c] = conn.eta[a] * dlow;
      }
  return conn;
}

std::array<std::array<KForm, 4>, 4> curvature_forms(const ConnectionForms& conn) {
  std::array<std::array<KForm, 4>, 4> curv{{{KForm(2), KForm(2), KForm(2), KForm(2)},
                                            {KForm(2), KForm(2), KForm(2), KForm(2)},
                                            {KForm(2), KForm(2), KForm(2), KForm(2)},
                                            {KForm(2), KForm(2), KForm(2), KForm(2)}}};
  std::array<KForm, 4> dtheta{KForm(2), KForm(2), KForm(2), KForm(2)};
  for (int a = 0; a < 4; ++a) dtheta[a] = conn.dtheta(a);

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      KForm omega_ab(2);
      // d omega^a_b: coefficients depend on t alone, so
      //   d(Gamma theta^c) = Gamma' dt ^ theta^c + Gamma d theta^c,
      // with dt = theta^4 / f.
      for (int c = 0; c < 4; ++c) {
        const double gp = conn.dgamma[a][b][c];
        if (gp != 0.0 && c != 3) omega_ab.add_term({4, c + 1}, gp / conn.gauge);
        const double gv = conn.gamma[a][b][c];
        if (gv != 0.0) omega_ab += gv * dtheta[c];
      }
      for (int c = 0; c < 4; ++c) {
        omega_ab += wedge(conn.omega(a, c), conn.omega(c, b));
      }
      curv[a][b] = omega_ab;
    }
  return curv;
}

RiemannTensor riemann(const FrameState& state) {
  const ConnectionForms conn = connection(state);
  const auto curv = curvature_forms(conn);
  RiemannTensor rm;
  rm.eta = conn.eta;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (c == d) continue;
          rm.R[a][b][c][d] = rm.eta[a] * curv[a][b].coeff({c + 1, d + 1});
        }
  return rm;
}

Eigen::Matrix4d ricci(const RiemannTensor& rm) {
  Eigen::Matrix4d ric = Eigen::Matrix4d::Zero();
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a) sum += rm.eta[a] * rm.R[a][b][a][d];
      ric(b, d) = sum;
    }
  return ric;
}

Eigen::Matrix4d ricci(const FrameState& state) { return ricci(riemann(state)); }

double scalar_curvature(const RiemannTensor& rm) {
  const Eigen::Matrix4d ric = ricci(rm);
  double s = 0.0;
  for (int b = 0; b < 4; ++b) s += rm.eta[b] * ric(b, b);
  return s;
}

double riemann_norm(const RiemannTensor& rm) {
  double sum = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) sum += rm.R[a][b][c][d] * rm.R[a][b][c][d];
  return std::sqrt(sum);
}

double pair_symmetry_residual(const RiemannTensor& rm) {
  double m = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          m = std::max(m, std::abs(rm.R[a][b][c][d] - rm.R[c][d][a][b]));
  return m;
}

std::pair<double, double> weyl_split(const RiemannTensor& rm, const SignatureSpec& sig) {
  const Eigen::Matrix4d ric = ricci(rm);
  const double s = scalar_curvature(rm);
  const Eigen::Vector4d& eta = rm.eta;

  // 4D Weyl decomposition with frame metric eta.
  double C[4][4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const double gac = a == c ? eta[a] : 0.0;
          const double gad = a == d ? eta[a] : 0.0;
          const double gbc = b == c ? eta[b] : 0.0;
          const double gbd = b == d ? eta[b] : 0.0;
          C[a][b][c][d] = rm.R[a][b][c][d] -
                          0.5 * (gac * ric(b, d) - gad * ric(b, c) + gbd * ric(a, c) -
                                 gbc * ric(a, d)) +
                          (s / 6.0) * (gac * gbd - gad * gbc);
        }

  // Operator on 2-forms in the ordered basis (12,13,14,23,24,34).
  const auto& pairs = KForm::basis_tuples(2);
  Eigen::Matrix<double, 6, 6> W;
  for (int I = 0; I < 6; ++I)
    for (int J = 0; J < 6; ++J) {
      const int a = pairs[I][0] - 1, b = pairs[I][1] - 1;
      const int c = pairs[J][0] - 1, d = pairs[J][1] - 1;
      W(I, J) = C[a][b][c][d] * eta[c] * eta[d];
    }

  const Eigen::Matrix<double, 6, 6> S = star_matrix(sig);
  const Eigen::Matrix<double, 6, 6> Pp = 0.5 * (Eigen::Matrix<double, 6, 6>::Identity() + S);
  const Eigen::Matrix<double, 6, 6> Pm = 0.5 * (Eigen::Matrix<double, 6, 6>::Identity() - S);
  const double sd = (Pp * W * Pp).norm();
  const double asd = (Pm * W * Pm).norm();
  return {sd, asd};
}

std::pair<double, double> weyl_split(const FrameState& state) {
  return weyl_split(riemann(state), signature_for(state.kind));
}

CurvatureReport curvature_report(const FrameState& state) {
  CurvatureReport rep;
  rep.t = state.t;
  const RiemannTensor rm = riemann(state);
  rep.ricci_max_abs = ricci(rm).cwiseAbs().maxCoeff();
  rep.riemann_norm = riemann_norm(rm);
  const auto weyl = weyl_split(rm, signature_for(state.kind));
  rep.weyl_sd_norm = weyl.first;
  rep.weyl_asd_norm = weyl.second;
  rep.dF_max_abs = max_abs(d_fundamental(state));
  return rep;
}

}  // namespace bianchi4d
