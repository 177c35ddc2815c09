#pragma once

#include <cmath>
#include <type_traits>

#include "rational.hpp"

namespace crnf {

/// Complex number over an arbitrary field K (double for float mode,
/// Rat for exact mode). std::complex is only specified for the builtin
/// floating types, hence this small stand-in.
template <class K>
struct Complex {
  K re{};
  K im{};

  Complex() = default;
  Complex(K r) : re(std::move(r)) {}
  Complex(K r, K i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(K(0), K(1)); }

  bool is_zero() const { return re == K(0) && im == K(0); }
  Complex conj() const { return Complex(re, K(0) - im); }
  K norm_sq() const { return re * re + im * im; }

  Complex operator-() const { return Complex(K(0) - re, K(0) - im); }

  friend Complex operator+(const Complex& x, const Complex& y) {
    return Complex(x.re + y.re, x.im + y.im);
  }
  friend Complex operator-(const Complex& x, const Complex& y) {
    return Complex(x.re - y.re, x.im - y.im);
  }
  friend Complex operator*(const Complex& x, const Complex& y) {
    return Complex(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }
  friend Complex operator*(const K& s, const Complex& y) {
    return Complex(s * y.re, s * y.im);
  }
  friend Complex operator/(const Complex& x, const Complex& y) {
    K n = y.norm_sq();
    Complex t = x * y.conj();
    return Complex(t.re / n, t.im / n);
  }
  Complex& operator+=(const Complex& y) { return *this = *this + y; }
  Complex& operator-=(const Complex& y) { return *this = *this - y; }
  Complex& operator*=(const Complex& y) { return *this = *this * y; }
  Complex& operator/=(const Complex& y) { return *this = *this / y; }

  friend bool operator==(const Complex& x, const Complex& y) {
    return x.re == y.re && x.im == y.im;
  }
};

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rat(const Rat& q) {
    return num(q).convert_to<double>() / den(q).convert_to<double>();
  }
  static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static Rat from_rat(const Rat& q) { return q; }
  static double to_double(const Rat& q) {
    return num(q).convert_to<double>() / den(q).convert_to<double>();
  }
};

template <class K>
double to_double(const K& x) {
  return ScalarTraits<K>::to_double(x);
}

template <class K>
double abs_approx(const Complex<K>& z) {
  double r = to_double(z.re), i = to_double(z.im);
  return std::hypot(r, i);
}

template <class K>
Complex<double> to_cd(const Complex<K>& z) {
  return Complex<double>(to_double(z.re), to_double(z.im));
}

}  // namespace crnf
