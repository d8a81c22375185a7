#ifndef BIANCHI4D_JET_HPP
#define BIANCHI4D_JET_HPP

#include <cmath>

namespace bianchi4d {

/// Second-order Taylor jet: value plus first and second derivative with
/// respect to a single curve parameter. Evaluating a scalar-templated
/// expression on Jet2 inputs propagates derivatives exactly; no finite
/// differences are involved.
///
/// The d2 channel is only meaningful when every input carries a correct d2.
/// Callers that seed an input with d2 = 0 because the true second derivative
/// is unknown get exact v and d1 and must ignore d2 of the result.
struct Jet2 {
  double v{0.0};
  double d1{0.0};
  double d2{0.0};

  constexpr Jet2() = default;
  constexpr Jet2(double v_, double d1_, double d2_) : v(v_), d1(d1_), d2(d2_) {}

  static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
  static constexpr Jet2 variable(double x) { return {x, 1.0, 0.0}; }

  constexpr Jet2 operator-() const { return {-v, -d1, -d2}; }
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
constexpr Jet2 operator+(const Jet2& a, double c) { return {a.v + c, a.d1, a.d2}; }
constexpr Jet2 operator+(double c, const Jet2& a) { return a + c; }
constexpr Jet2 operator-(const Jet2& a, double c) { return {a.v - c, a.d1, a.d2}; }
constexpr Jet2 operator-(double c, const Jet2& a) { return {c - a.v, -a.d1, -a.d2}; }
constexpr Jet2 operator*(const Jet2& a, double c) { return {a.v * c, a.d1 * c, a.d2 * c}; }
constexpr Jet2 operator*(double c, const Jet2& a) { return a * c; }

constexpr Jet2 inverse(const Jet2& a) {
  const double iv = 1.0 / a.v;
  const double iv2 = iv * iv;
  return {iv, -a.d1 * iv2, (2.0 * a.d1 * a.d1 * iv - a.d2) * iv2};
}
constexpr Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }
constexpr Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
constexpr Jet2 operator/(double c, const Jet2& a) { return inverse(a) * c; }

/// a^p for a.v > 0 (the domain guards live with the solution families).
inline Jet2 pow(const Jet2& a, double p) {
  const double w = std::pow(a.v, p);
  const double w1 = p * std::pow(a.v, p - 1.0);
  const double w2 = p * (p - 1.0) * std::pow(a.v, p - 2.0);
  return {w, w1 * a.d1, w2 * a.d1 * a.d1 + w1 * a.d2};
}

inline Jet2 sqrt(const Jet2& a) { return pow(a, 0.5); }

/// Signed cube root, defined for negative arguments as well.
inline Jet2 cbrt(const Jet2& a) {
  const double w = std::cbrt(a.v);
  const double w1 = 1.0 / (3.0 * w * w);
  const double w2 = -2.0 / (9.0 * w * w * w * w * w);
  return {w, w1 * a.d1, w2 * a.d1 * a.d1 + w1 * a.d2};
}

inline Jet2 exp(const Jet2& a) {
  const double w = std::exp(a.v);
  return {w, w * a.d1, w * (a.d2 + a.d1 * a.d1)};
}

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return {s, c * a.d1, c * a.d2 - s * a.d1 * a.d1};
}

inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return {c, -s * a.d1, -s * a.d2 - c * a.d1 * a.d1};
}

}  // namespace bianchi4d

#endif
