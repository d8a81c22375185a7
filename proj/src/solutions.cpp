#include "bianchi4d/solutions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "bianchi4d/errors.hpp"
#include "bianchi4d/jet.hpp"

namespace bianchi4d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require(const Params& p, const char* key, const char* family) {
  auto it = p.find(key);
  if (it == p.end())
    throw UsageError(std::string(family) + " needs parameter '" + key + "'");
  return it->second;
}

double get_or(const Params& p, const char* key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_positive(double value, const std::string& factor) {
  if (!(value > 0.0)) {
    throw DomainError("factor " + factor + " must be positive (got " + std::to_string(value) + ")");
  }
}

struct FamilyName {
  FamilyId id;
  const char* name;
};

constexpr std::array<FamilyName, 12> kFamilyNames{{
    {FamilyId::GeneralPPP, "general-ppp"},
    {FamilyId::GeneralPPM, "general-ppm"},
    {FamilyId::General00P, "general-00p"},
    {FamilyId::General0PP, "general-0pp"},
    {FamilyId::General0PM, "general-0pm"},
    {FamilyId::EguchiHanson, "eguchi-hanson"},
    {FamilyId::Su11Biaxial, "su11-biaxial"},
    {FamilyId::BgppTriaxial, "bgpp-triaxial"},
    {FamilyId::HeisenbergGH, "heisenberg-gh"},
    {FamilyId::Vii0Vacuum, "vii0-vacuum"},
    {FamilyId::Vi0Vacuum, "vi0-vacuum"},
    {FamilyId::Flat, "flat"},
}};

Jet2 quarter_root(const Jet2& a) { return pow(a, 0.25); }

}  // namespace

std::string to_string(FamilyId id) {
  for (const auto& f : kFamilyNames) {
    if (f.id == id) return f.name;
  }
  throw UsageError("unknown family id");
}

FamilyId family_from_string(const std::string& name) {
  for (const auto& f : kFamilyNames) {
    if (name == f.name) return f.id;
  }
  throw UsageError("unknown family '" + name + "'");
}

SolutionFamily::SolutionFamily(FamilyId id, Params params) : id_(id), params_(std::move(params)) {
  const double branch = get_or(params_, "_branch", +1.0);
  switch (id_) {
    case FamilyId::GeneralPPP: {
      const double m = std::max({require(params_, "a1", "general-ppp"),
                                 require(params_, "a2", "general-ppp"),
                                 require(params_, "a3", "general-ppp")});
      domain_ = {m, kInf};
      break;
    }
    case FamilyId::GeneralPPM: {
      const double a1 = require(params_, "a1", "general-ppm");
      const double a2 = require(params_, "a2", "general-ppm");
      const double a3 = require(params_, "a3", "general-ppm");
      if (!(a3 > std::max(a1, a2)))
        throw UsageError("general-ppm domain is empty unless a3 > max(a1,a2)");
      domain_ = {std::max(a1, a2), a3};
      break;
    }
    case FamilyId::General00P: {
      const double a = require(params_, "a", "general-00p");
      const double b = require(params_, "b", "general-00p");
      const double c = require(params_, "c", "general-00p");
      if (!(a > 0.0) || !(b > 0.0)) throw UsageError("general-00p needs a > 0 and b > 0");
      const double r_crit = -c / (1.5 * std::pow(a * b, 0.25));
      domain_ = branch > 0 ? Interval{r_crit, kInf} : Interval{-kInf, r_crit};
      break;
    }
    case FamilyId::General0PP: {
      const double a1 = require(params_, "a1", "general-0pp");
      const double a2 = require(params_, "a2", "general-0pp");
      const double a3 = require(params_, "a3", "general-0pp");
      if (!(a1 > 0.0)) throw UsageError("general-0pp needs a1 > 0");
      domain_ = {std::max(a2, a3), kInf};
      break;
    }
    case FamilyId::General0PM: {
      const double a1 = require(params_, "a1", "general-0pm");
      const double a2 = require(params_, "a2", "general-0pm");
      const double a3 = require(params_, "a3", "general-0pm");
      if (!(a1 > 0.0)) throw UsageError("general-0pm needs a1 > 0");
      if (!(a3 > a2)) throw UsageError("general-0pm domain is empty unless a3 > a2");
      domain_ = {a2, a3};
      break;
    }
    case FamilyId::EguchiHanson: {
      const double a = require(params_, "a", "eguchi-hanson");
      domain_ = {a > 0.0 ? std::pow(a, 0.25) : 0.0, kInf};
      break;
    }
    case FamilyId::Su11Biaxial: {
      const double a = require(params_, "a", "su11-biaxial");
      if (!(a > 0.0)) throw UsageError("su11-biaxial needs a > 0");
      domain_ = {0.0, std::pow(a, 0.25)};
      break;
    }
    case FamilyId::BgppTriaxial: {
      const double a = require(params_, "a", "bgpp-triaxial");
      const double b = require(params_, "b", "bgpp-triaxial");
      const double c = require(params_, "c", "bgpp-triaxial");
      domain_ = {std::max({std::abs(a), std::abs(b), std::abs(c)}), kInf};
      break;
    }
    case FamilyId::HeisenbergGH:
      domain_ = {0.0, kInf};
      break;
    case FamilyId::Vii0Vacuum: {
      const double A = require(params_, "A", "vii0-vacuum");
      const double B = require(params_, "B", "vii0-vacuum");
      if (!(A > 0.0)) throw UsageError("vii0-vacuum needs A > 0");
      domain_ = {B == 0.0 ? -kInf : 0.5 * std::log(std::abs(B) / A), kInf};
      break;
    }
    case FamilyId::Vi0Vacuum: {
      const double a = require(params_, "a", "vi0-vacuum");
      const double b = require(params_, "b", "vi0-vacuum");
      if (a == 0.0 && b == 0.0) throw UsageError("vi0-vacuum needs (a,b) != (0,0)");
      const double t0 = std::atan2(b, a);
      domain_ = {t0, t0 + 0.5 * M_PI};
      break;
    }
    case FamilyId::Flat: {
      for (const char* key : {"c1", "c2", "c3"}) {
        if (get_or(params_, key, 1.0) == 0.0) throw UsageError("flat family needs nonzero constants");
      }
      domain_ = {-kInf, kInf};
      break;
    }
  }
}

Eigen::Vector3i SolutionFamily::sigma() const {
  Eigen::Vector3i s;
  switch (id_) {
    case FamilyId::GeneralPPP:
    case FamilyId::EguchiHanson:
    case FamilyId::BgppTriaxial:
      s = {1, 1, 1};
      break;
    case FamilyId::GeneralPPM:
    case FamilyId::Su11Biaxial:
      s = {1, 1, -1};
      break;
    case FamilyId::General00P:
    case FamilyId::HeisenbergGH:
      s = {0, 0, 1};
      break;
    case FamilyId::General0PP:
    case FamilyId::Vii0Vacuum:
      s = {0, 1, 1};
      break;
    case FamilyId::General0PM:
    case FamilyId::Vi0Vacuum:
      s = {0, 1, -1};
      break;
    case FamilyId::Flat:
      s = {0, 0, 0};
      break;
  }
  return flip3_ ? Eigen::Vector3i(-s) : s;
}

namespace {

// Each evaluator checks its root arguments and returns (f1, f2, f3, f) as
// jets in t. Factors are kept as separate roots, matching the published
// expressions, so a sign problem is reported against the factor that caused it.
std::array<Jet2, 4> eval_family(FamilyId id, const Params& p, double tval) {
  const Jet2 t = Jet2::variable(tval);
  switch (id) {
    case FamilyId::GeneralPPP: {
      const double a1 = p.at("a1"), a2 = p.at("a2"), a3 = p.at("a3");
      check_positive(tval - a1, "x - a1");
      check_positive(tval - a2, "x - a2");
      check_positive(tval - a3, "x - a3");
      const Jet2 r1 = quarter_root(t - a1), r2 = quarter_root(t - a2), r3 = quarter_root(t - a3);
      const Jet2 h = 0.5 / (r1 * r2 * r3);
      return {r2 * r3 / r1, r3 * r1 / r2, r1 * r2 / r3, h};
    }
    case FamilyId::GeneralPPM: {
      const double a1 = p.at("a1"), a2 = p.at("a2"), a3 = p.at("a3");
      check_positive(tval - a1, "x - a1");
      check_positive(tval - a2, "x - a2");
      check_positive(a3 - tval, "a3 - x");
      const Jet2 r1 = quarter_root(t - a1), r2 = quarter_root(t - a2), r3 = quarter_root(a3 - t);
      const Jet2 h = 0.5 / (r1 * r2 * r3);
      return {r2 * r3 / r1, r3 * r1 / r2, r1 * r2 / r3, h};
    }
    case FamilyId::General00P: {
      const double a = p.at("a"), b = p.at("b"), c = p.at("c");
      const Jet2 q = 1.5 * std::pow(a * b, 0.25) * t + c;
      if (q.v == 0.0) throw DomainError("factor (3/2)(ab)^(1/4) r + c must be nonzero");
      const Jet2 cr = cbrt(q);
      const double ba = std::pow(b / a, 0.25), ab = std::pow(a * b, 0.25);
      return {ba * cr, (1.0 / ba) * cr, ab / cr, Jet2::constant(1.0)};
    }
    case FamilyId::General0PP: {
      const double a1 = p.at("a1"), a2 = p.at("a2"), a3 = p.at("a3");
      check_positive(tval - a2, "x - a2");
      check_positive(tval - a3, "x - a3");
      const double r1 = std::pow(a1, 0.25);
      const Jet2 r2 = quarter_root(t - a2), r3 = quarter_root(t - a3);
      const Jet2 h = 0.5 / (r1 * r2 * r3);
      return {r2 * r3 / r1, r1 * r3 / r2, r1 * r2 / r3, h};
    }
    case FamilyId::General0PM: {
      const double a1 = p.at("a1"), a2 = p.at("a2"), a3 = p.at("a3");
      check_positive(tval - a2, "x - a2");
      check_positive(a3 - tval, "a3 - x");
      const double r1 = std::pow(a1, 0.25);
      const Jet2 r2 = quarter_root(t - a2), r3 = quarter_root(a3 - t);
      const Jet2 h = 0.5 / (r1 * r2 * r3);
      return {r2 * r3 / r1, r1 * r3 / r2, r1 * r2 / r3, h};
    }
    case FamilyId::EguchiHanson: {
      const double a = p.at("a");
      check_positive(tval, "t");
      const Jet2 w = t * t * t * t - a;
      check_positive(w.v, "t^4 - a");
      const Jet2 sw = sqrt(w);
      return {t * 0.5, t * 0.5, sw / (2.0 * t), t * t / sw};
    }
    case FamilyId::Su11Biaxial: {
      const double a = p.at("a");
      check_positive(tval, "t");
      const Jet2 w = a - t * t * t * t;
      check_positive(w.v, "a - t^4");
      const Jet2 rw = quarter_root(w);
      return {0.5 * rw, 0.5 * rw, 0.5 * t * t / rw, t / rw};
    }
    case FamilyId::BgppTriaxial: {
      const double a = p.at("a"), b = p.at("b"), c = p.at("c");
      const Jet2 x = t * t * t * t;
      const Jet2 xa = x - std::pow(a, 4.0), xb = x - std::pow(b, 4.0), xc = x - std::pow(c, 4.0);
      check_positive(xa.v, "t^4 - a^4");
      check_positive(xb.v, "t^4 - b^4");
      check_positive(xc.v, "t^4 - c^4");
      const Jet2 ra = quarter_root(xa), rb = quarter_root(xb), rc = quarter_root(xc);
      return {rb * rc / ra, ra * rc / rb, ra * rb / rc, 2.0 * t * t * t / (ra * rb * rc)};
    }
    case FamilyId::HeisenbergGH: {
      check_positive(tval, "t");
      const Jet2 s = sqrt(t);
      return {s, s, 1.0 / s, s};
    }
    case FamilyId::Vii0Vacuum: {
      const double A = p.at("A"), B = p.at("B");
      const Jet2 u = A * exp(t) + B * exp(-t);
      const Jet2 w = A * exp(t) - B * exp(-t);
      check_positive(u.v, "A e^t + B e^(-t)");
      check_positive(w.v, "A e^t - B e^(-t)");
      const Jet2 su = sqrt(u), sw = sqrt(w);
      return {0.5 * su * sw, su / sw, sw / su, 0.5 * su * sw};
    }
    case FamilyId::Vi0Vacuum: {
      const double a = p.at("a"), b = p.at("b");
      const Jet2 q = a * cos(t) + b * sin(t);
      const Jet2 r = a * sin(t) - b * cos(t);
      check_positive(q.v, "a cos t + b sin t");
      check_positive(r.v, "a sin t - b cos t");
      const Jet2 sq = sqrt(q), sr = sqrt(r);
      return {sq * sr, sq / sr, sr / sq, sq * sr};
    }
    case FamilyId::Flat: {
      auto c = [&](const char* key) {
        auto it = p.find(key);
        return it == p.end() ? 1.0 : it->second;
      };
      return {Jet2::constant(c("c1")), Jet2::constant(c("c2")), Jet2::constant(c("c3")),
              Jet2::constant(1.0)};
    }
  }
  throw UsageError("unknown family id");
}

}  // namespace

FamilySample SolutionFamily::eval(double t) const {
  if (!domain_.contains(t)) {
    throw DomainError("t = " + std::to_string(t) + " outside the domain of family " +
                      to_string(id_));
  }
  const auto jets = eval_family(id_, params_, t);
  FamilySample s;
  s.t = t;
  for (int i = 0; i < 3; ++i) {
    const double sign = (i == 2 && flip3_) ? -1.0 : 1.0;
    s.f[i] = sign * jets[i].v;
    s.df[i] = sign * jets[i].d1;
    s.d2f[i] = sign * jets[i].d2;
  }
  s.gauge = jets[3].v;
  s.dgauge = jets[3].d1;
  s.d2gauge = jets[3].d2;
  return s;
}

FrameState SolutionFamily::state_at(double t, const BianchiAlgebra& alg, StructureKind kind) const {
  const FamilySample s = eval(t);
  FrameState state;
  state.t = t;
  state.f = s.f;
  state.df = s.df;
  state.d2f = s.d2f;
  state.gauge = s.gauge;
  state.dgauge = s.dgauge;
  state.kind = kind;
  state.algebra = alg;
  return state;
}

SolutionFamily SolutionFamily::with_f3_flipped() const {
  SolutionFamily out = *this;
  out.flip3_ = !out.flip3_;
  return out;
}

SolutionFamily closed_form(const EvolutionSystem& sys, const Params& params,
                           std::optional<double> seed) {
  bool flipped = false;
  const Eigen::Vector3i canon = canonical_sigma(sys.sigma, &flipped);

  FamilyId id;
  if (canon == Eigen::Vector3i(0, 0, 0)) {
    id = FamilyId::Flat;
  } else if (canon == Eigen::Vector3i(1, 1, 1)) {
    id = FamilyId::GeneralPPP;
  } else if (canon == Eigen::Vector3i(1, 1, -1)) {
    id = FamilyId::GeneralPPM;
  } else if (canon == Eigen::Vector3i(0, 0, 1)) {
    id = FamilyId::General00P;
  } else if (canon == Eigen::Vector3i(0, 1, 1)) {
    id = FamilyId::General0PP;
  } else if (canon == Eigen::Vector3i(0, 1, -1)) {
    id = FamilyId::General0PM;
  } else {
    throw UsageError("no general family for this sign pattern");
  }

  Params p = params;
  if (id == FamilyId::General00P) {
    if (!p.count("a")) p["a"] = 1.0;
    if (!p.count("b")) p["b"] = 1.0;
    if (!p.count("c")) p["c"] = 0.0;
  } else if (id != FamilyId::Flat) {
    for (const char* key : {"a1", "a2", "a3"}) {
      if (!p.count(key)) p[key] = 0.0;
    }
  }

  SolutionFamily family(id, p);
  if (seed && !family.domain().contains(*seed)) {
    if (id == FamilyId::General00P) {
      p["_branch"] = -1.0;
      family = SolutionFamily(id, p);
    }
    if (!family.domain().contains(*seed)) {
      throw DomainError("seed point lies outside every branch of family " + to_string(id));
    }
  }
  return flipped ? family.with_f3_flipped() : family;
}

SolutionFamily named_solution(FamilyId id, const Params& params) {
  return SolutionFamily(id, params);
}

SolutionFamily named_solution(const std::string& name, const Params& params) {
  return SolutionFamily(family_from_string(name), params);
}

}  // namespace bianchi4d
