#include "bianchi4d/geometry.hpp"

#include <cmath>

#include "bianchi4d/errors.hpp"
#include "bianchi4d/jet.hpp"

namespace bianchi4d {

SignatureSpec signature_for(StructureKind kind) {
  return kind == StructureKind::HyperKahler ? SignatureSpec::euclidean() : SignatureSpec::neutral();
}

Eigen::Vector4d frame_eta(StructureKind kind) { return signature_for(kind).eta; }

std::array<KForm, 3> fundamental_forms(const FrameState& s) {
  const double s1 = s.kind == StructureKind::HyperKahler ? 1.0 : -1.0;
  KForm f1(2), f2(2), f3(2);
  f1.add_term({1, 2}, s1 * s.f[0] * s.f[1]);
  f1.add_term({3, 4}, s.f[2] * s.gauge);
  f2.add_term({1, 3}, s.f[0] * s.f[2]);
  f2.add_term({2, 4}, -s.f[1] * s.gauge);
  f3.add_term({2, 3}, s.f[1] * s.f[2]);
  f3.add_term({1, 4}, s.f[0] * s.gauge);
  return {f1, f2, f3};
}

std::array<KForm, 3> fundamental_forms_theta(StructureKind kind) {
  const double s1 = kind == StructureKind::HyperKahler ? 1.0 : -1.0;
  KForm f1(2), f2(2), f3(2);
  f1.add_term({1, 2}, s1);
  f1.add_term({3, 4}, 1.0);
  f2.add_term({1, 3}, 1.0);
  f2.add_term({2, 4}, -1.0);
  f3.add_term({2, 3}, 1.0);
  f3.add_term({1, 4}, 1.0);
  return {f1, f2, f3};
}

Eigen::Matrix4d frame_metric(const FrameState& s) {
  const double sg = s.kind == StructureKind::HyperKahler ? 1.0 : -1.0;
  Eigen::Vector4d d(s.f[0] * s.f[0], s.f[1] * s.f[1], sg * s.f[2] * s.f[2],
                    sg * s.gauge * s.gauge);
  return d.asDiagonal();
}

namespace {

// d of c(t) e^i ^ e^j for spatial i < j: time part c' e^ij ^ dt plus the
// structure part c * d(e^ij), which is proportional to e^123 (class B only).
void add_spatial_pair(KForm& out, const BianchiAlgebra& alg, int i, int j, double c, double dc) {
  out.add_term({i, j, 4}, dc);
  Eigen::Vector3d two_form = Eigen::Vector3d::Zero();  // on {e23, e31, e12}
  if (i == 2 && j == 3) two_form[0] = c;
  if (i == 1 && j == 3) two_form[1] = -c;
  if (i == 1 && j == 2) two_form[2] = c;
  out.add_term({1, 2, 3}, d_two_form(alg, two_form));
}

// d of c(t) e^i ^ dt = c de^i ^ dt.
void add_time_pair(KForm& out, const BianchiAlgebra& alg, int i, double c) {
  Eigen::Vector3d basis = Eigen::Vector3d::Zero();
  basis[i - 1] = c;
  const Eigen::Vector3d d = d_one_form(alg, basis);  // on {e23, e31, e12}
  out.add_term({2, 3, 4}, d[0]);
  out.add_term({3, 1, 4}, d[1]);
  out.add_term({1, 2, 4}, d[2]);
}

}  // namespace

std::array<KForm, 3> d_fundamental(const FrameState& s) {
  const double s1 = s.kind == StructureKind::HyperKahler ? 1.0 : -1.0;
  const auto dprod = [&](int i, int j) { return s.df[i] * s.f[j] + s.f[i] * s.df[j]; };

  KForm d1(3), d2(3), d3(3);
  add_spatial_pair(d1, s.algebra, 1, 2, s1 * s.f[0] * s.f[1], s1 * dprod(0, 1));
  add_time_pair(d1, s.algebra, 3, s.f[2] * s.gauge);

  add_spatial_pair(d2, s.algebra, 1, 3, s.f[0] * s.f[2], dprod(0, 2));
  add_time_pair(d2, s.algebra, 2, -s.f[1] * s.gauge);

  add_spatial_pair(d3, s.algebra, 2, 3, s.f[1] * s.f[2], dprod(1, 2));
  add_time_pair(d3, s.algebra, 1, s.f[0] * s.gauge);
  return {d1, d2, d3};
}

double max_abs(const std::array<KForm, 3>& forms) {
  double m = 0.0;
  for (const KForm& f : forms) m = std::max(m, f.max_abs());
  return m;
}

namespace {

Eigen::Matrix4d form_to_matrix(const KForm& f) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      if (a != b) m(a - 1, b - 1) = f.coeff({a, b});
  return m;
}

}  // namespace

StructureTriple endomorphisms(const FrameState& state) {
  const auto forms = fundamental_forms_theta(state.kind);
  const Eigen::Vector4d eta = frame_eta(state.kind);
  StructureTriple triple;
  triple.kind = state.kind;
  for (int s = 0; s < 3; ++s) {
    const Eigen::Matrix4d F = form_to_matrix(forms[s]);
    if (state.kind == StructureKind::HyperKahler) {
      // F_s(X,Y) = g(J_s X, Y)  =>  J = eta^{-1} F^T.
      triple.endo[s] = eta.asDiagonal() * F.transpose();
    } else {
      // Omega_s(X,Y) = g(X, J_s Y)  =>  J = eta^{-1} Omega.
      triple.endo[s] = eta.asDiagonal() * F;
    }
  }
  if (endomorphism_identity_residual(triple) > 1e-12) {
    throw ConsistencyError("structure endomorphisms violate their defining identities");
  }
  return triple;
}

double endomorphism_identity_residual(const StructureTriple& t) {
  const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
  const Eigen::Vector4d eta =
      frame_eta(t.kind);
  const Eigen::Matrix4d g = eta.asDiagonal();
  const auto& e = t.endo;
  double m = 0.0;
  auto upd = [&m](const Eigen::Matrix4d& r) { m = std::max(m, r.cwiseAbs().maxCoeff()); };
  if (t.kind == StructureKind::HyperKahler) {
    for (int s = 0; s < 3; ++s) {
      upd(e[s] * e[s] + id);                    // J_s^2 = -Id
      upd(e[s].transpose() * g * e[s] - g);     // isometry
    }
    upd(e[0] * e[1] - e[2]);                    // J1 J2 = J3
    upd(e[0] * e[1] + e[1] * e[0]);             // anticommutation
  } else {
    upd(e[0] * e[0] + id);                      // J^2 = -Id
    upd(e[1] * e[1] - id);                      // P1^2 = +Id
    upd(e[2] * e[2] - id);                      // P2^2 = +Id
    upd(e[0] * e[1] - e[2]);                    // J P1 = P2
    upd(e[0] * e[1] + e[1] * e[0]);             // J P1 = -P1 J
    upd(e[0].transpose() * g * e[0] - g);       // J isometry
    upd(e[1].transpose() * g * e[1] + g);       // P1 anti-isometry
    upd(e[2].transpose() * g * e[2] + g);       // P2 anti-isometry
  }
  return m;
}

FrameStructure frame_structure(const FrameState& s) {
  if (!s.valid()) throw DomainError("frame coefficients must be nonzero");
  FrameStructure out;

  // Evaluate every coefficient as (value, d/dt) jets. The d2 channel of the
  // inputs that would need third derivatives is zeroed and ignored.
  const Jet2 f[3] = {{s.f[0], s.df[0], 0.0}, {s.f[1], s.df[1], 0.0}, {s.f[2], s.df[2], 0.0}};
  const Jet2 df[3] = {{s.df[0], s.d2f[0], 0.0}, {s.df[1], s.d2f[1], 0.0}, {s.df[2], s.d2f[2], 0.0}};
  const Jet2 g{s.gauge, s.dgauge, 0.0};

  auto set = [&out](int a, int b, int c, const Jet2& value) {
    out.T[a][b][c] += value.v;
    out.T[a][c][b] -= value.v;
    out.dT[a][b][c] += value.d1;
    out.dT[a][c][b] -= value.d1;
  };

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    set(i, 3, i, df[i] / (g * f[i]));
    set(i, j, k, -s.algebra.b[i] * f[i] / (f[j] * f[k]));
  }
  if (s.algebra.a != 0.0) {
    // Non-unimodular terms: T^2_{12} = -a/f1, T^3_{31} = +a/f1.
    set(1, 0, 1, Jet2::constant(-s.algebra.a) / f[0]);
    set(2, 2, 0, Jet2::constant(s.algebra.a) / f[0]);
  }
  return out;
}

NijenhuisComponents nijenhuis(const FrameState& state, const Eigen::Matrix4d& P) {
  const FrameStructure fs = frame_structure(state);

  auto bracket = [&fs](const Eigen::Vector4d& v, const Eigen::Vector4d& w) {
    Eigen::Vector4d out = Eigen::Vector4d::Zero();
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        if (v[c] == 0.0 || w[d] == 0.0) continue;
        for (int e = 0; e < 4; ++e) out[e] -= v[c] * w[d] * fs.T[e][c][d];
      }
    return out;
  };

  NijenhuisComponents n;
  for (int a = 0; a < 4; ++a) {
    const Eigen::Vector4d ea = Eigen::Vector4d::Unit(a);
    const Eigen::Vector4d pa = P.col(a);
    for (int b = 0; b < 4; ++b) {
      const Eigen::Vector4d eb = Eigen::Vector4d::Unit(b);
      const Eigen::Vector4d pb = P.col(b);
      n[a][b] = bracket(pa, pb) - P * bracket(pa, eb) - P * bracket(ea, pb) +
                P * (P * bracket(ea, eb));
    }
  }
  return n;
}

double max_abs(const NijenhuisComponents& n) {
  double m = 0.0;
  for (const auto& row : n)
    for (const auto& v : row) m = std::max(m, v.cwiseAbs().maxCoeff());
  return m;
}

Chart chart_for(BianchiLabel label) {
  switch (label) {
    case BianchiLabel::IX:
    case BianchiLabel::VIII:
      return {label, {"theta", "phi", "psi"}};
    case BianchiLabel::II:
    case BianchiLabel::I:
      return {label, {"x", "y", "z"}};
    case BianchiLabel::VII0:
    case BianchiLabel::VI0:
      return {label, {"phi", "x", "y"}};
    default:
      throw UsageError("no coordinate chart for group " + to_string(label));
  }
}

Eigen::Matrix3d chart_matrix(const Chart& chart, const Eigen::Vector3d& c) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  switch (chart.label) {
    case BianchiLabel::IX: {
      const double th = c[0], psi = c[2];
      m << std::sin(psi), -std::cos(psi) * std::sin(th), 0.0,
           std::cos(psi), std::sin(psi) * std::sin(th), 0.0,
           0.0, std::cos(th), 1.0;
      break;
    }
    case BianchiLabel::VIII: {
      const double th = c[0], psi = c[2];
      m << 0.0, -std::cos(th), 1.0,
           std::sinh(psi), std::cosh(psi) * std::sin(th), 0.0,
           std::cosh(psi), std::sinh(psi) * std::sin(th), 0.0;
      break;
    }
    case BianchiLabel::II: {
      const double x = c[0], y = c[1];
      m << 1.0, 0.0, 0.0,
           0.0, 1.0, 0.0,
           0.5 * y, -0.5 * x, 1.0;
      break;
    }
    case BianchiLabel::VII0: {
      const double phi = c[0];
      m << 1.0, 0.0, 0.0,
           0.0, std::sin(phi), -std::cos(phi),
           0.0, std::cos(phi), std::sin(phi);
      break;
    }
    case BianchiLabel::VI0: {
      const double phi = c[0];
      m << 1.0, 0.0, 0.0,
           0.0, std::sinh(phi), std::cosh(phi),
           0.0, std::cosh(phi), std::sinh(phi);
      break;
    }
    case BianchiLabel::I:
      m = Eigen::Matrix3d::Identity();
      break;
    default:
      throw UsageError("no coordinate chart for group " + to_string(chart.label));
  }
  return m;
}

Eigen::Matrix4d metric_in_coordinates(const FrameState& state, const Chart& chart,
                                      const Eigen::Vector3d& coords) {
  if (chart.label != state.algebra.label) {
    throw UsageError("chart group " + to_string(chart.label) + " does not match state group " +
                     to_string(state.algebra.label));
  }
  const double sg = state.kind == StructureKind::HyperKahler ? 1.0 : -1.0;
  const Eigen::Matrix3d m = chart_matrix(chart, coords);
  const Eigen::Vector3d d(state.f[0] * state.f[0], state.f[1] * state.f[1],
                          sg * state.f[2] * state.f[2]);
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = sg * state.gauge * state.gauge;
  g.block<3, 3>(1, 1) = m.transpose() * d.asDiagonal() * m;
  return g;
}

std::vector<CompanionSample> conformal_companion(const SolutionFamily& family,
                                                 const Reparam& reparam,
                                                 const std::vector<double>& t_samples) {
  std::vector<CompanionSample> out;
  out.reserve(t_samples.size());
  for (double t : t_samples) {
    const FamilySample s = family.eval(t);
    const double rp = reparam.dr(t);
    if (!(rp > 0.0)) throw UsageError("reparametrization must be strictly increasing");
    CompanionSample cs;
    cs.t = t;
    cs.r = reparam.r(t);
    cs.phi = s.gauge / rp;
    if (!(cs.phi > 0.0)) throw UsageError("conformal factor must be positive");
    // Both metrics are written in the r coordinate: f^2 dt^2 = (f/r')^2 dr^2.
    cs.g_diag = {s.f[0] * s.f[0], s.f[1] * s.f[1], s.f[2] * s.f[2],
                 (s.gauge / rp) * (s.gauge / rp)};
    const double p2 = cs.phi * cs.phi;
    cs.ghat_diag = {cs.g_diag[0] / p2, cs.g_diag[1] / p2, cs.g_diag[2] / p2, 1.0};
    cs.guard_residual = (cs.g_diag - p2 * cs.ghat_diag).cwiseAbs().maxCoeff() /
                        std::max(1.0, cs.g_diag.cwiseAbs().maxCoeff());
    if (!(cs.guard_residual < 1e-10)) {
      throw ConsistencyError("conformal companion failed the g = phi^2 ghat guard");
    }
    out.push_back(cs);
  }
  return out;
}

}  // namespace bianchi4d
