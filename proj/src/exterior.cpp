#include "bianchi4d/exterior.hpp"

#include <algorithm>
#include <array>

#include "bianchi4d/errors.hpp"

namespace bianchi4d {

namespace {

const std::vector<std::vector<std::vector<int>>>& tuple_tables() {
  static const std::vector<std::vector<std::vector<int>>> tables = [] {
    std::vector<std::vector<std::vector<int>>> t(5);
    t[0] = {{}};
    for (int i = 1; i <= 4; ++i) t[1].push_back({i});
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) t[2].push_back({i, j});
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k) t[3].push_back({i, j, k});
    t[4] = {{1, 2, 3, 4}};
    return t;
  }();
  return tables;
}

int tuple_position(int degree, const std::vector<int>& sorted) {
  const auto& table = tuple_tables()[degree];
  for (size_t p = 0; p < table.size(); ++p) {
    if (table[p] == sorted) return static_cast<int>(p);
  }
  throw UsageError("index tuple out of range");
}

// Sorts `idx` in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i + 1 < idx.size(); ++i) {
    for (size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  for (size_t i = 0; i + 1 < idx.size(); ++i) {
    if (idx[i] == idx[i + 1]) return 0;
  }
  return sign;
}

void check_degree(int degree) {
  if (degree < 0 || degree > 4) throw UsageError("form degree must be 0..4");
}

}  // namespace

KForm::KForm(int degree) : degree_(degree) {
  check_degree(degree);
  c_ = Eigen::VectorXd::Zero(static_cast<int>(tuple_tables()[degree].size()));
}

KForm KForm::basis(int degree, std::initializer_list<int> indices) {
  KForm f(degree);
  f.add_term(indices, 1.0);
  return f;
}

double KForm::coeff(std::initializer_list<int> indices) const {
  std::vector<int> idx(indices);
  if (static_cast<int>(idx.size()) != degree_) throw UsageError("index count does not match degree");
  const int sign = sort_sign(idx);
  if (sign == 0) return 0.0;
  return sign * c_[tuple_position(degree_, idx)];
}

void KForm::add_term(std::initializer_list<int> indices, double value) {
  std::vector<int> idx(indices);
  if (static_cast<int>(idx.size()) != degree_) throw UsageError("index count does not match degree");
  for (int i : idx) {
    if (i < 1 || i > 4) throw UsageError("basis index must be 1..4");
  }
  const int sign = sort_sign(idx);
  if (sign == 0) return;
  c_[tuple_position(degree_, idx)] += sign * value;
}

KForm& KForm::operator+=(const KForm& other) {
  if (degree_ != other.degree_) throw UsageError("degree mismatch in form sum");
  c_ += other.c_;
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  if (degree_ != other.degree_) throw UsageError("degree mismatch in form difference");
  c_ -= other.c_;
  return *this;
}

KForm& KForm::operator*=(double s) {
  c_ *= s;
  return *this;
}

const std::vector<std::vector<int>>& KForm::basis_tuples(int degree) {
  check_degree(degree);
  return tuple_tables()[degree];
}

KForm wedge(const KForm& a, const KForm& b) {
  const int deg = a.degree() + b.degree();
  if (deg > 4) throw UsageError("wedge degree overflow");
  KForm out(deg);
  const auto& ta = KForm::basis_tuples(a.degree());
  const auto& tb = KForm::basis_tuples(b.degree());
  for (int i = 0; i < a.size(); ++i) {
    if (a.coeffs()[i] == 0.0) continue;
    for (int j = 0; j < b.size(); ++j) {
      if (b.coeffs()[j] == 0.0) continue;
      std::vector<int> merged = ta[i];
      merged.insert(merged.end(), tb[j].begin(), tb[j].end());
      const int sign = sort_sign(merged);
      if (sign == 0) continue;
      out.coeffs()[tuple_position(deg, merged)] += sign * a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return out;
}

namespace {

// Even completion (c,d) of the pair (a,b) inside (1,2,3,4).
std::array<int, 2> even_complement(int a, int b) {
  std::array<int, 2> rest{};
  int r = 0;
  for (int i = 1; i <= 4; ++i) {
    if (i != a && i != b) rest[r++] = i;
  }
  std::vector<int> word{a, b, rest[0], rest[1]};
  if (sort_sign(word) < 0) std::swap(rest[0], rest[1]);
  return rest;
}

}  // namespace

KForm hodge(const KForm& alpha, const SignatureSpec& sig) {
  if (alpha.degree() != 2) throw UsageError("hodge star implemented for 2-forms only");
  KForm out(2);
  const auto& pairs = KForm::basis_tuples(2);
  for (int i = 0; i < 6; ++i) {
    const double c = alpha.coeffs()[i];
    if (c == 0.0) continue;
    const int a = pairs[i][0], b = pairs[i][1];
    const auto cd = even_complement(a, b);
    const double factor = sig.orientation * sig.eta[cd[0] - 1] * sig.eta[cd[1] - 1];
    out.add_term({cd[0], cd[1]}, factor * c);
  }
  return out;
}

std::pair<KForm, KForm> sd_asd_split(const KForm& alpha, const SignatureSpec& sig) {
  KForm star = hodge(alpha, sig);
  KForm plus = (alpha + star) * 0.5;
  KForm minus = (alpha - star) * 0.5;
  return {plus, minus};
}

Eigen::Matrix<double, 6, 6> star_matrix(const SignatureSpec& sig) {
  Eigen::Matrix<double, 6, 6> s = Eigen::Matrix<double, 6, 6>::Zero();
  const auto& pairs = KForm::basis_tuples(2);
  for (int j = 0; j < 6; ++j) {
    KForm col = hodge(KForm::basis(2, {pairs[j][0], pairs[j][1]}), sig);
    s.col(j) = col.coeffs();
  }
  return s;
}

double two_form_inner(const KForm& a, const KForm& b, const SignatureSpec& sig) {
  if (a.degree() != 2 || b.degree() != 2) throw UsageError("inner product defined on 2-forms");
  const auto& pairs = KForm::basis_tuples(2);
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    sum += sig.eta[pairs[i][0] - 1] * sig.eta[pairs[i][1] - 1] * a.coeffs()[i] * b.coeffs()[i];
  }
  return sum;
}

}  // namespace bianchi4d
