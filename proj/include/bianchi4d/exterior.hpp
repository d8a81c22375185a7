#ifndef BIANCHI4D_EXTERIOR_HPP
#define BIANCHI4D_EXTERIOR_HPP

#include <Eigen/Core>
#include <initializer_list>
#include <utility>
#include <vector>

namespace bianchi4d {

/// Graded exterior algebra over a fixed 4-dimensional coframe basis.
/// Basis 1-forms are indexed 1..4; a k-form stores one coefficient per
/// strictly increasing index tuple, ordered lexicographically. Coefficients
/// are plain numbers; any time dependence lives with the caller.
class KForm {
 public:
  explicit KForm(int degree);

  static KForm basis(int degree, std::initializer_list<int> indices);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(c_.size()); }

  const Eigen::VectorXd& coeffs() const { return c_; }
  Eigen::VectorXd& coeffs() { return c_; }

  /// Coefficient of an index tuple, not necessarily sorted; the sign of the
  /// sorting permutation is applied. Repeated indices give zero.
  double coeff(std::initializer_list<int> indices) const;

  /// Adds `value` times the basis form of the given (possibly unsorted) tuple.
  void add_term(std::initializer_list<int> indices, double value);

  double max_abs() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(double s);

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, double s) { return a *= s; }
  friend KForm operator*(double s, KForm a) { return a *= s; }

  /// Increasing index tuples of all basis k-forms, lexicographic.
  static const std::vector<std::vector<int>>& basis_tuples(int degree);

 private:
  int degree_;
  Eigen::VectorXd c_;
};

KForm wedge(const KForm& a, const KForm& b);

/// Diagonal frame metric and orientation used by the star operator.
/// Riemannian: eta = (+,+,+,+), orientation +1.
/// Neutral:    eta = (+,+,-,-), orientation -1.
struct SignatureSpec {
  Eigen::Vector4d eta{1.0, 1.0, 1.0, 1.0};
  int orientation{+1};

  static SignatureSpec euclidean() { return {{1.0, 1.0, 1.0, 1.0}, +1}; }
  static SignatureSpec neutral() { return {{1.0, 1.0, -1.0, -1.0}, -1}; }
};

/// Hodge star on 2-forms: star(e^a ^ e^b) = orientation * eta_c eta_d e^c ^ e^d
/// with (a,b,c,d) an even permutation of (1,2,3,4). With these conventions
/// star∘star = +1 on 2-forms in both supported signatures.
KForm hodge(const KForm& alpha, const SignatureSpec& sig);

/// alpha = plus + minus with star(plus) = plus and star(minus) = -minus.
std::pair<KForm, KForm> sd_asd_split(const KForm& alpha, const SignatureSpec& sig);

/// Star operator as a 6x6 matrix on the 2-form basis (12,13,14,23,24,34).
Eigen::Matrix<double, 6, 6> star_matrix(const SignatureSpec& sig);

/// Induced inner product on 2-forms: <e^ab, e^ab> = eta_a eta_b.
double two_form_inner(const KForm& a, const KForm& b, const SignatureSpec& sig);

}  // namespace bianchi4d

#endif
