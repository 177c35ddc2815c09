#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace crnf {

using MultiIndex = std::vector<std::uint8_t>;

inline int mi_total(const MultiIndex& I) {
  return std::accumulate(I.begin(), I.end(), 0);
}

/// Monomial z^I conj(z)^J u^l. Weight counts u twice; the type is the
/// bidegree (|I|, |J|).
struct Monomial {
  MultiIndex zi;
  MultiIndex zj;
  int l{0};

  Monomial() = default;
  Monomial(MultiIndex i, MultiIndex j, int l_)
      : zi(std::move(i)), zj(std::move(j)), l(l_) {}

  int s() const { return mi_total(zi); }
  int t() const { return mi_total(zj); }
  int weight() const { return s() + t() + 2 * l; }

  Monomial conj() const { return Monomial(zj, zi, l); }

  bool operator==(const Monomial& o) const {
    return l == o.l && zi == o.zi && zj == o.zj;
  }

  /// Canonical order: lexicographic on (weight, |zi|, zi, zj, l).
  bool operator<(const Monomial& o) const {
    int w = weight(), ow = o.weight();
    if (w != ow) return w < ow;
    int a = s(), b = o.s();
    if (a != b) return a < b;
    if (zi != o.zi) return zi < o.zi;
    if (zj != o.zj) return zj < o.zj;
    return l < o.l;
  }
};

}  // namespace crnf
