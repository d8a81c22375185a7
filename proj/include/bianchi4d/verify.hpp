#ifndef BIANCHI4D_VERIFY_HPP
#define BIANCHI4D_VERIFY_HPP

#include <string>
#include <vector>

#include "bianchi4d/curvature.hpp"
#include "bianchi4d/solutions.hpp"

namespace bianchi4d {

/// Pass thresholds for the verification suite. The paper reports no numbers;
/// these are the library's documented defaults and are echoed verbatim into
/// every report.
struct Tolerances {
  double residual = 1e-10;
  double dF = 1e-12;
  double ricci = 1e-8;
  double weyl_sd = 1e-8;
  double nijenhuis = 1e-10;
};

/// Everything checked at one sample point.
struct SampleResult {
  CurvatureReport curvature;
  double residual_max_abs{};
  double endo_identity_max_abs{};
  double nijenhuis_max_abs{};
  int sig_plus{}, sig_minus{};
  bool pass_residual{}, pass_dF{}, pass_ricci{}, pass_weyl_sd{}, pass_nijenhuis{},
      pass_signature{};
  bool pass() const {
    return pass_residual && pass_dF && pass_ricci && pass_weyl_sd && pass_nijenhuis &&
           pass_signature;
  }
};

struct VerificationRun {
  BianchiLabel group{};
  StructureKind kind{};
  std::string family_name;
  Params params;
  double t_min{}, t_max{};
  int samples{};
  double perturb{};
  bool f3_flipped{};
  Tolerances tol;
  std::vector<SampleResult> results;
  bool verdict{};
};

/// Runs residual, closedness, endomorphism-identity, Nijenhuis, Ricci,
/// Weyl-SD and signature checks at `samples` interior points of [t_min,
/// t_max]. The family must solve the (group, kind) system exactly or up to
/// the f3 sign, in which case the flip is applied and recorded.
VerificationRun run_verification(BianchiLabel group, StructureKind kind,
                                 const std::string& family_name, const Params& params,
                                 double t_min, double t_max, int samples, const Tolerances& tol,
                                 double perturb = 0.0);

SampleResult check_state(const FrameState& state, const EvolutionSystem& sys,
                         const Tolerances& tol);

/// Deterministic JSON: fixed field order, 17 significant digits.
std::string to_json(const VerificationRun& run);

/// Interior sample grid: midpoints of `n` equal subintervals.
std::vector<double> sample_grid(double t_min, double t_max, int n);

}  // namespace bianchi4d

#endif
