#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace crnf {

/// Exact element a + b*sqrt(17) of the real quadratic field Q(sqrt 17).
struct QuadExt {
  Rat a{0};
  Rat b{0};

  QuadExt() = default;
  QuadExt(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadExt(const Rat& a_) : a(a_) {}
  static QuadExt sqrt17() { return QuadExt(Rat(0), Rat(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  QuadExt conj() const { return QuadExt(a, -b); }  // Galois conjugate
  Rat norm() const { return a * a - 17 * b * b; }

  QuadExt operator-() const { return QuadExt(-a, -b); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a * y.a + 17 * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt division by zero");
    Rat n = y.norm();  // nonzero: 17 is not a rational square
    QuadExt t = x * y.conj();
    return QuadExt(t.a / n, t.b / n);
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a == y.a && x.b == y.b;
  }

  /// Exact sign, decided by comparing a^2 against 17 b^2; no floats involved.
  int sign() const {
    int sa = sign_of(a), sb = sign_of(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs sqrt(17)|b|.
    int cmp = (a * a < 17 * b * b) ? -1 : (a * a > 17 * b * b ? 1 : 0);
    // cmp compares |a| against sqrt(17)|b|; the larger magnitude wins.
    if (cmp == 0) throw std::logic_error("sqrt17 rational: impossible");
    return cmp > 0 ? sa : sb;
  }

  bool operator<(const QuadExt& y) const { return (*this - y).sign() < 0; }
  bool operator>(const QuadExt& y) const { return (*this - y).sign() > 0; }

  BigFloat to_float(unsigned bits) const {
    PrecisionGuard g(bits + 32);
    BigFloat v = to_bigfloat(a) + to_bigfloat(b) * sqrt(BigFloat(17));
    return v;
  }
};

inline QuadExt quadext_pow(QuadExt x, unsigned long e) {
  QuadExt r(Rat(1), Rat(0));
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

/// lambda_1 = (3 - sqrt17)/2, lambda_2 = (3 + sqrt17)/2: the roots of
/// x^2 - 3x - 2 = 0.
inline QuadExt lambda1() { return QuadExt(Rat(3, 2), Rat(-1, 2)); }
inline QuadExt lambda2() { return QuadExt(Rat(3, 2), Rat(1, 2)); }

/// Continued-fraction convergents p/q of sqrt(17) with q <= q_max,
/// in increasing q. The expansion is computed by the standard quadratic
/// surd recurrence, not hard-coded.
inline std::vector<std::pair<Int, Int>> sqrt17_convergents(const Int& q_max) {
  if (q_max < 1) throw std::invalid_argument("q_max must be >= 1");
  const Int D = 17;
  const Int a0 = isqrt(D);  // 4
  std::vector<std::pair<Int, Int>> out;

  Int m = 0, d = 1, a = a0;
  Int p_prev = 1, p_cur = a0;
  Int q_prev = 0, q_cur = 1;
  while (q_cur <= q_max) {
    out.emplace_back(p_cur, q_cur);
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Int p_next = a * p_cur + p_prev;
    Int q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
  }
  return out;
}

/// Exact check of |sqrt17 - p/q| > 2/(17 q^2), equivalently
/// 17^2 q^2 (p - q sqrt17)^2 > 4 in Q(sqrt17).
inline bool liouville_bound_holds(const Int& p, const Int& q) {
  QuadExt diff(Rat(p), Rat(-q));
  QuadExt lhs = QuadExt(Rat(289) * Rat(q * q)) * diff * diff;
  return (lhs - QuadExt(Rat(4))).sign() > 0;
}

}  // namespace crnf
