#include "bianchi4d/verify.hpp"

#include <Eigen/Eigenvalues>

#include "bianchi4d/errors.hpp"
#include "bianchi4d/json_writer.hpp"

namespace bianchi4d {

std::vector<double> sample_grid(double t_min, double t_max, int n) {
  if (!(t_max > t_min) || n < 1) throw UsageError("need t_max > t_min and at least one sample");
  std::vector<double> out(n);
  const double h = (t_max - t_min) / n;
  for (int k = 0; k < n; ++k) out[k] = t_min + (k + 0.5) * h;
  return out;
}

SampleResult check_state(const FrameState& state, const EvolutionSystem& sys,
                         const Tolerances& tol) {
  SampleResult r;
  r.curvature = curvature_report(state);
  r.residual_max_abs = residual(sys, state).cwiseAbs().maxCoeff();

  const StructureTriple triple = endomorphisms(state);
  r.endo_identity_max_abs = endomorphism_identity_residual(triple);
  double nij = 0.0;
  for (const auto& endo : triple.endo) nij = std::max(nij, max_abs(nijenhuis(state, endo)));
  r.nijenhuis_max_abs = nij;

  const Eigen::Matrix4d g = frame_metric(state);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
  for (int i = 0; i < 4; ++i) (es.eigenvalues()[i] > 0.0 ? r.sig_plus : r.sig_minus)++;

  const bool riemannian = state.kind == StructureKind::HyperKahler;
  r.pass_residual = r.residual_max_abs < tol.residual;
  r.pass_dF = r.curvature.dF_max_abs < tol.dF;
  r.pass_ricci = r.curvature.ricci_max_abs < tol.ricci;
  r.pass_weyl_sd = r.curvature.weyl_sd_norm < tol.weyl_sd;
  r.pass_nijenhuis = r.nijenhuis_max_abs < tol.nijenhuis;
  r.pass_signature = riemannian ? (r.sig_plus == 4 && r.sig_minus == 0)
                                : (r.sig_plus == 2 && r.sig_minus == 2);
  return r;
}

VerificationRun run_verification(BianchiLabel group, StructureKind kind,
                                 const std::string& family_name, const Params& params,
                                 double t_min, double t_max, int samples, const Tolerances& tol,
                                 double perturb) {
  const BianchiAlgebra alg = algebra_for(group);
  const EvolutionSystem sys = reduce(alg, kind);

  SolutionFamily family = family_name == "general"
                              ? closed_form(sys, params, 0.5 * (t_min + t_max))
                              : named_solution(family_name, params);
  bool flipped = family.f3_flipped();
  if (family.sigma() != sys.sigma) {
    if (family.sigma() == Eigen::Vector3i(-sys.sigma)) {
      family = family.with_f3_flipped();
      flipped = family.f3_flipped();
    } else {
      throw UsageError("family " + to_string(family.id()) + " does not solve the (" +
                       to_string(group) + ", " + to_string(kind) + ") system");
    }
  }

  VerificationRun run;
  run.group = group;
  run.kind = kind;
  run.family_name = family_name;
  run.params = params;
  run.t_min = t_min;
  run.t_max = t_max;
  run.samples = samples;
  run.perturb = perturb;
  run.f3_flipped = flipped;
  run.tol = tol;

  bool verdict = true;
  for (double t : sample_grid(t_min, t_max, samples)) {
    FrameState state = family.state_at(t, alg, kind);
    if (perturb != 0.0) state = perturb_f1(state, perturb);
    const SampleResult r = check_state(state, sys, tol);
    verdict = verdict && r.pass();
    run.results.push_back(r);
  }
  run.verdict = verdict;
  return run;
}

std::string to_json(const VerificationRun& run) {
  JsonWriter w;
  w.begin_object();
  w.key("spec").begin_object();
  w.key("group").value(to_string(run.group));
  w.key("kind").value(to_string(run.kind));
  w.key("family").value(run.family_name);
  w.key("params").begin_object();
  for (const auto& [k, v] : run.params) w.key(k).value(v);
  w.end_object();
  w.key("t_min").value(run.t_min);
  w.key("t_max").value(run.t_max);
  w.key("samples").value(run.samples);
  w.key("perturb").value(run.perturb);
  w.key("f3_flipped").value(run.f3_flipped);
  w.end_object();

  w.key("tolerances").begin_object();
  w.key("residual").value(run.tol.residual);
  w.key("dF").value(run.tol.dF);
  w.key("ricci").value(run.tol.ricci);
  w.key("weyl_sd").value(run.tol.weyl_sd);
  w.key("nijenhuis").value(run.tol.nijenhuis);
  w.end_object();

  w.key("results").begin_array();
  for (const SampleResult& r : run.results) {
    w.begin_object();
    w.key("t").value(r.curvature.t);
    w.key("ricci_max_abs").value(r.curvature.ricci_max_abs);
    w.key("riemann_norm").value(r.curvature.riemann_norm);
    w.key("weyl_sd_norm").value(r.curvature.weyl_sd_norm);
    w.key("weyl_asd_norm").value(r.curvature.weyl_asd_norm);
    w.key("dF_max_abs").value(r.curvature.dF_max_abs);
    w.key("residual_max_abs").value(r.residual_max_abs);
    w.key("endo_identity_max_abs").value(r.endo_identity_max_abs);
    w.key("nijenhuis_max_abs").value(r.nijenhuis_max_abs);
    w.key("signature").begin_array().value(r.sig_plus).value(r.sig_minus).end_array();
    w.key("pass").begin_object();
    w.key("residual").value(r.pass_residual);
    w.key("dF").value(r.pass_dF);
    w.key("ricci").value(r.pass_ricci);
    w.key("weyl_sd").value(r.pass_weyl_sd);
    w.key("nijenhuis").value(r.pass_nijenhuis);
    w.key("signature").value(r.pass_signature);
    w.end_object();
    w.end_object();
  }
  w.end_array();

  w.key("verdict").value(run.verdict ? "pass" : "fail");
  w.end_object();
  return w.str();
}

}  // namespace bianchi4d
