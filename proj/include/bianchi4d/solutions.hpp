#ifndef BIANCHI4D_SOLUTIONS_HPP
#define BIANCHI4D_SOLUTIONS_HPP

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>

#include "bianchi4d/evolution.hpp"
#include "bianchi4d/frame.hpp"

namespace bianchi4d {

/// Closed-form solution families of the reduced evolution systems.
/// The General* entries are the general solutions of the five sign patterns
/// (1,1,1), (1,1,-1), (0,0,1), (0,1,1), (0,1,-1), parameterized by the
/// auxiliary variable x with the identity gauge x(t) = t. The named entries
/// are particular solutions in their published parameterization.
enum class FamilyId {
  GeneralPPP,    // sigma (1,1,1)
  GeneralPPM,    // sigma (1,1,-1)
  General00P,    // sigma (0,0,1)
  General0PP,    // sigma (0,1,1)
  General0PM,    // sigma (0,1,-1)
  EguchiHanson,  // biaxial (1,1,1), parameter a
  Su11Biaxial,   // biaxial (1,1,-1), parameter a > 0
  BgppTriaxial,  // triaxial (1,1,1), parameters a,b,c
  HeisenbergGH,  // (0,0,1), no parameters
  Vii0Vacuum,    // (0,1,1), parameters A,B
  Vi0Vacuum,     // (0,1,-1), parameters a,b
  Flat,          // sigma (0,0,0), constant coefficients
};

std::string to_string(FamilyId id);
FamilyId family_from_string(const std::string& name);

using Params = std::map<std::string, double>;

struct Interval {
  double lo;
  double hi;
  bool contains(double t) const { return t > lo && t < hi; }
};

/// Values and t-derivatives of (f1,f2,f3,f) at one evaluation point.
struct FamilySample {
  double t{};
  Eigen::Vector3d f, df, d2f;
  double gauge{}, dgauge{}, d2gauge{};
};

/// A closed-form solution with analytic derivative closures (second-order
/// Taylor jets, no finite differences). Evaluation is restricted to the
/// maximal interval on which every factor under a root is positive and all
/// of f1,f2,f3,f are nonzero.
class SolutionFamily {
 public:
  SolutionFamily(FamilyId id, Params params);

  FamilyId id() const { return id_; }
  const Params& params() const { return params_; }
  Eigen::Vector3i sigma() const;
  Interval domain() const { return domain_; }
  bool f3_flipped() const { return flip3_; }

  FamilySample eval(double t) const;
  FrameState state_at(double t, const BianchiAlgebra& alg, StructureKind kind) const;

  /// Same metric data with f3 negated; solves the sign-negated system.
  SolutionFamily with_f3_flipped() const;

 private:
  FamilyId id_;
  Params params_;
  bool flip3_{false};
  Interval domain_{0.0, 0.0};
};

/// General solution of a reduced system, dispatched on the canonical sign
/// pattern; a system equal to minus a canonical pattern gets the canonical
/// family with f3 negated. sigma = (0,0,0) yields the constant family.
/// `seed`, when given, selects the domain branch containing it.
SolutionFamily closed_form(const EvolutionSystem& sys, const Params& params,
                           std::optional<double> seed = std::nullopt);

SolutionFamily named_solution(FamilyId id, const Params& params);
SolutionFamily named_solution(const std::string& name, const Params& params);

}  // namespace bianchi4d

#endif
