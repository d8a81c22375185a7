#ifndef BIANCHI4D_BIANCHI_HPP
#define BIANCHI4D_BIANCHI_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace bianchi4d {

/// The eleven rows of the Bianchi classification of 3-dimensional Lie
/// algebras in the diagonal normal form
///   de1 = -b1 e23,  de2 = -a e12 - b2 e31,  de3 = -b3 e12 + a e31.
/// VIIa and VIa carry a free parameter a (a > 0, resp. 0 < a != 1).
enum class BianchiLabel { I, II, VI0, VII0, VIII, IX, V, IV, VIIa, III, VIa };

struct BianchiAlgebra {
  BianchiLabel label{BianchiLabel::I};
  double a{0.0};                           // non-unimodular (class B) parameter
  Eigen::Vector3d b{0.0, 0.0, 0.0};        // diagonal constants (b1, b2, b3)
};

/// Classification-table row for a label. The one-parameter families VIIa/VIa
/// take their parameter from `a_param`; it is ignored for the fixed rows.
BianchiAlgebra algebra_for(BianchiLabel label, double a_param = 2.0);

/// Unimodularity gate: class A means a = 0. Evolution systems exist only on
/// class A; callers constructing them must reject class B.
inline bool is_class_a(const BianchiAlgebra& alg) { return alg.a == 0.0; }
inline bool admit_class_a(const BianchiAlgebra& alg) { return is_class_a(alg); }

/// d(c1 e1 + c2 e2 + c3 e3) expanded on the 2-form basis {e23, e31, e12}.
Eigen::Vector3d d_one_form(const BianchiAlgebra& alg, const Eigen::Vector3d& coeffs);

/// d of a 2-form given on the basis {e23, e31, e12}; the result is the
/// coefficient of e123. Only e23 has a nonzero differential: d(e23) = -2a e123.
double d_two_form(const BianchiAlgebra& alg, const Eigen::Vector3d& coeffs);

std::vector<BianchiLabel> all_labels();
std::vector<BianchiLabel> class_a_labels();

/// Serialized names: "I","II","VI0","VII0","VIII","IX","V","IV","VIIa","III","VIa".
std::string to_string(BianchiLabel label);
BianchiLabel label_from_string(const std::string& name);

}  // namespace bianchi4d

#endif
