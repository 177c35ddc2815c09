#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "rational.hpp"

namespace crnf {

using BigFloat = boost::multiprecision::mpfr_float;

/// Scoped working precision for BigFloat, requested in binary digits.
/// mpfr allocates per decimal digits, so we round up and keep guard bits.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(BigFloat::default_precision()) {
    unsigned digits10 = static_cast<unsigned>(bits * 0.3010299957) + 4;
    BigFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline BigFloat to_bigfloat(const Rat& q) {
  return BigFloat(num(q)) / BigFloat(den(q));
}

inline BigFloat to_bigfloat(const Int& z) { return BigFloat(z); }

inline BigFloat sqrt17(unsigned bits) {
  PrecisionGuard g(bits);
  return sqrt(BigFloat(17));
}

}  // namespace crnf
