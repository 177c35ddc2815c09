#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace crnf {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rat& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r = 1;
  if (k > n - k) k = n - k;
  for (unsigned long i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

inline Int factorial_falling(unsigned long n, unsigned long k) {
  // n * (n-1) * ... * (n-k+1)
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= Int(n - i);
  return r;
}

/// Canonical "p/q" form, always with an explicit denominator.
inline std::string rat_str(const Rat& q) {
  return num(q).str() + "/" + den(q).str();
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int p(s.substr(0, slash));
  Int q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(p) / Rat(q);
}

inline double rat_to_double(const Rat& q) {
  return num(q).convert_to<double>() / den(q).convert_to<double>();
}

inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

/// Exact square root of a nonnegative rational, if it exists.
inline std::optional<Rat> rat_sqrt_exact(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int p = num(q), d = den(q);
  Int sp = isqrt(p), sd = isqrt(d);
  if (sp * sp != p || sd * sd != d) return std::nullopt;
  return Rat(sp) / Rat(sd);
}

}  // namespace crnf
