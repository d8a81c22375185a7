#include "bianchi4d/bianchi.hpp"

#include <array>

#include "bianchi4d/errors.hpp"

namespace bianchi4d {

namespace {

struct Row {
  BianchiLabel label;
  const char* name;
  double a;
  double b1, b2, b3;
  bool parametric;  // a comes from the caller
};

// Classification table. Parametric rows store a placeholder a.
constexpr std::array<Row, 11> kTable{{
    {BianchiLabel::I, "I", 0.0, 0.0, 0.0, 0.0, false},
    {BianchiLabel::II, "II", 0.0, 0.0, 0.0, 1.0, false},
    {BianchiLabel::VI0, "VI0", 0.0, 0.0, 1.0, -1.0, false},
    {BianchiLabel::VII0, "VII0", 0.0, 0.0, 1.0, 1.0, false},
    {BianchiLabel::VIII, "VIII", 0.0, 1.0, 1.0, -1.0, false},
    {BianchiLabel::IX, "IX", 0.0, 1.0, 1.0, 1.0, false},
    {BianchiLabel::V, "V", 1.0, 0.0, 0.0, 0.0, false},
    {BianchiLabel::IV, "IV", 1.0, 0.0, 0.0, 1.0, false},
    {BianchiLabel::VIIa, "VIIa", 0.0, 0.0, 1.0, 1.0, true},
    {BianchiLabel::III, "III", 1.0, 0.0, 1.0, -1.0, false},
    {BianchiLabel::VIa, "VIa", 0.0, 0.0, 1.0, -1.0, true},
}};

const Row& row_for(BianchiLabel label) {
  for (const Row& r : kTable) {
    if (r.label == label) return r;
  }
  throw UsageError("unknown Bianchi label");
}

}  // namespace

BianchiAlgebra algebra_for(BianchiLabel label, double a_param) {
  const Row& r = row_for(label);
  BianchiAlgebra alg;
  alg.label = label;
  alg.b = Eigen::Vector3d(r.b1, r.b2, r.b3);
  if (r.parametric) {
    if (label == BianchiLabel::VIIa && !(a_param > 0.0))
      throw UsageError("VIIa requires parameter a > 0");
    if (label == BianchiLabel::VIa && !(a_param > 0.0 && a_param != 1.0))
      throw UsageError("VIa requires parameter 0 < a != 1");
    alg.a = a_param;
  } else {
    alg.a = r.a;
  }
  return alg;
}

Eigen::Vector3d d_one_form(const BianchiAlgebra& alg, const Eigen::Vector3d& c) {
  // d(c1 e1 + c2 e2 + c3 e3) on {e23, e31, e12}.
  return {-c[0] * alg.b[0], -c[1] * alg.b[1] + c[2] * alg.a, -c[1] * alg.a - c[2] * alg.b[2]};
}

double d_two_form(const BianchiAlgebra& alg, const Eigen::Vector3d& c) {
  return -2.0 * alg.a * c[0];
}

std::vector<BianchiLabel> all_labels() {
  std::vector<BianchiLabel> out;
  for (const Row& r : kTable) out.push_back(r.label);
  return out;
}

std::vector<BianchiLabel> class_a_labels() {
  std::vector<BianchiLabel> out;
  for (const Row& r : kTable) {
    if (r.a == 0.0 && !r.parametric) out.push_back(r.label);
  }
  return out;
}

std::string to_string(BianchiLabel label) { return row_for(label).name; }

BianchiLabel label_from_string(const std::string& name) {
  for (const Row& r : kTable) {
    if (name == r.name) return r.label;
  }
  throw UsageError("unknown Bianchi label '" + name + "'");
}

}  // namespace bianchi4d
