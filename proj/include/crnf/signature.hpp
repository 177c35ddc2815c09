#pragma once

#include <stdexcept>

namespace crnf {

/// Signature of the Hermitian form <z,z> = sum_a eps_a z^a conj(z^a),
/// eps_a = +1 for a < e and -1 otherwise. e == n is the strongly
/// pseudoconvex (definite) case.
struct Signature {
  int n{1};
  int e{1};

  Signature() = default;
  Signature(int n_, int e_) : n(n_), e(e_) {
    if (n < 1 || e < 0 || e > n) throw std::invalid_argument("bad signature");
  }

  int eps(int alpha) const { return alpha < e ? 1 : -1; }
  bool definite() const { return e == n; }
  bool operator==(const Signature& o) const { return n == o.n && e == o.e; }
  bool operator!=(const Signature& o) const { return !(*this == o); }
};

}  // namespace crnf
