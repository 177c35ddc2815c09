#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "complexk.hpp"
#include "monomial.hpp"
#include "signature.hpp"

namespace crnf {

/// Truncated real formal power series F(z, conj z, u) with complex
/// coefficients on monomials z^I conj(z)^J u^l, kept through weight
/// trunc_weight. Reality of F is the coefficient symmetry
/// c(I,J,l) == conj(c(J,I,l)); it is validated, not assumed.
template <class K>
class Series {
 public:
  using C = Complex<K>;

  Series() = default;
  Series(Signature sig, int trunc_weight) : sig_(sig), n_(trunc_weight) {}

  const Signature& sig() const { return sig_; }
  int trunc_weight() const { return n_; }
  const std::map<Monomial, C>& terms() const { return t_; }
  bool empty() const { return t_.empty(); }

  static Series hermitian(Signature sig, int trunc_weight) {
    Series f(sig, trunc_weight);
    for (int a = 0; a < sig.n; ++a) {
      MultiIndex zi(sig.n, 0), zj(sig.n, 0);
      zi[a] = 1;
      zj[a] = 1;
      f.add(Monomial(zi, zj, 0), C(K(sig.eps(a))));
    }
    return f;
  }

  static Series monomial_series(Signature sig, int trunc_weight,
                                const Monomial& m, C c) {
    Series f(sig, trunc_weight);
    f.add(m, std::move(c));
    return f;
  }

  static Series u_series(Signature sig, int trunc_weight) {
    Series f(sig, trunc_weight);
    f.add(Monomial(MultiIndex(sig.n, 0), MultiIndex(sig.n, 0), 1), C(K(1)));
    return f;
  }

  void add(const Monomial& m, const C& c) {
    if (m.weight() > n_) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      if (!c.is_zero()) t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  C coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? C() : it->second;
  }

  friend Series operator+(const Series& x, const Series& y) {
    Series r = x.compatible(y);
    r.t_ = x.t_;
    for (auto& [m, c] : y.t_) r.add(m, c);
    return r;
  }
  friend Series operator-(const Series& x, const Series& y) {
    Series r = x.compatible(y);
    r.t_ = x.t_;
    for (auto& [m, c] : y.t_) r.add(m, -c);
    return r;
  }
  friend Series operator*(const Series& x, const Series& y) {
    Series r = x.compatible(y);
    for (auto& [mx, cx] : x.t_)
      for (auto& [my, cy] : y.t_) {
        if (mx.weight() + my.weight() > r.n_) continue;
        Monomial m = mx;
        for (int a = 0; a < r.sig_.n; ++a) {
          m.zi[a] = static_cast<std::uint8_t>(m.zi[a] + my.zi[a]);
          m.zj[a] = static_cast<std::uint8_t>(m.zj[a] + my.zj[a]);
        }
        m.l += my.l;
        r.add(m, cx * cy);
      }
    return r;
  }
  friend Series operator*(const C& s, const Series& x) {
    Series r(x.sig_, x.n_);
    if (s.is_zero()) return r;
    for (auto& [m, c] : x.t_) r.add(m, s * c);
    return r;
  }
  Series& operator+=(const Series& y) { return *this = *this + y; }
  Series& operator-=(const Series& y) { return *this = *this - y; }

  Series pow(int k) const {
    Series r = monomial_series(sig_, n_, Monomial(MultiIndex(sig_.n, 0),
                                                  MultiIndex(sig_.n, 0), 0),
                               C(K(1)));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  /// Series with conjugated coefficients and z <-> conj z swapped; equals
  /// the original exactly when F is real-valued.
  Series conj_series() const {
    Series r(sig_, n_);
    for (auto& [m, c] : t_) r.add(m.conj(), c.conj());
    return r;
  }

  bool is_real(double tol = 0.0) const {
    for (auto& [m, c] : t_) {
      C d = c - coeff(m.conj()).conj();
      if (ScalarTraits<K>::exact) {
        if (!d.is_zero()) return false;
      } else if (abs_approx(d) > tol) {
        return false;
      }
    }
    return true;
  }

  Series dz(int alpha) const {
    Series r(sig_, n_);
    for (auto& [m, c] : t_) {
      if (m.zi[alpha] == 0) continue;
      Monomial d = m;
      int k = d.zi[alpha]--;
      r.add(d, C(K(k)) * c);
    }
    return r;
  }
  Series dzbar(int alpha) const {
    Series r(sig_, n_);
    for (auto& [m, c] : t_) {
      if (m.zj[alpha] == 0) continue;
      Monomial d = m;
      int k = d.zj[alpha]--;
      r.add(d, C(K(k)) * c);
    }
    return r;
  }
  Series du() const {
    Series r(sig_, n_);
    for (auto& [m, c] : t_) {
      if (m.l == 0) continue;
      Monomial d = m;
      int k = d.l--;
      r.add(d, C(K(k)) * c);
    }
    return r;
  }

  /// Signature Laplacian sum_a eps_a d^2/dz^a dzbar^a, applied k times.
  Series laplacian(int order = 1) const {
    Series r = *this;
    for (int it = 0; it < order; ++it) {
      Series next(sig_, n_);
      for (auto& [m, c] : r.t_)
        for (int a = 0; a < sig_.n; ++a) {
          if (m.zi[a] == 0 || m.zj[a] == 0) continue;
          Monomial d = m;
          int ki = d.zi[a]--;
          int kj = d.zj[a]--;
          next.add(d, C(K(sig_.eps(a) * ki * kj)) * c);
        }
      r = next;
    }
    return r;
  }

  /// Chern-Moser trace on a pure type-(s,t) piece in the normalized frame
  /// F_11 = <z,z>: (1/(s t)) * Laplacian.
  Series trace_op(int s, int t) const {
    if (s < 1 || t < 1) throw std::invalid_argument("trace needs s,t >= 1");
    for (auto& [m, c] : t_)
      if (m.s() != s || m.t() != t)
        throw std::invalid_argument("trace on mixed-type series");
    C factor(K(1));
    factor = factor / C(K(s * t));
    return factor * laplacian();
  }

  Series filter(const std::function<bool(const Monomial&)>& keep) const {
    Series r(sig_, n_);
    for (auto& [m, c] : t_)
      if (keep(m)) r.add(m, c);
    return r;
  }

  Series weight_component(int w) const {
    return filter([w](const Monomial& m) { return m.weight() == w; });
  }
  Series weight_at_most(int w) const {
    return filter([w](const Monomial& m) { return m.weight() <= w; });
  }
  Series type_component(int s, int t) const {
    return filter([s, t](const Monomial& m) { return m.s() == s && m.t() == t; });
  }
  Series min_type_at_least(int k) const {
    return filter([k](const Monomial& m) { return std::min(m.s(), m.t()) >= k; });
  }

  std::map<int, Series> decompose_by_weight() const {
    std::map<int, Series> r;
    for (auto& [m, c] : t_) {
      auto [it, fresh] = r.try_emplace(m.weight(), sig_, n_);
      it->second.add(m, c);
    }
    return r;
  }
  std::map<std::pair<int, int>, Series> decompose_by_type() const {
    std::map<std::pair<int, int>, Series> r;
    for (auto& [m, c] : t_) {
      auto [it, fresh] = r.try_emplace(std::make_pair(m.s(), m.t()), sig_, n_);
      it->second.add(m, c);
    }
    return r;
  }

  int min_weight() const {
    int w = n_ + 1;
    for (auto& [m, c] : t_) w = std::min(w, m.weight());
    return w;
  }
  int max_weight() const {
    int w = 0;
    for (auto& [m, c] : t_) w = std::max(w, m.weight());
    return w;
  }

  /// Largest coefficient magnitude (double estimate; exact values convert).
  double max_abs() const {
    double r = 0;
    for (auto& [m, c] : t_) r = std::max(r, abs_approx(c));
    return r;
  }

  /// Drop terms of magnitude <= eps (float-mode cleanup).
  Series pruned(double eps) const {
    Series r(sig_, n_);
    for (auto& [m, c] : t_)
      if (abs_approx(c) > eps) r.add(m, c);
    return r;
  }

  Series truncated(int new_weight) const {
    Series r(sig_, new_weight);
    for (auto& [m, c] : t_)
      if (m.weight() <= new_weight) r.add(m, c);
    return r;
  }

  /// Plain term-by-term numeric evaluation.
  Complex<double> eval_complex(const std::vector<Complex<double>>& z,
                               double u) const {
    if (static_cast<int>(z.size()) != sig_.n)
      throw std::invalid_argument("eval dimension");
    Complex<double> acc;
    for (auto& [m, c] : t_) {
      Complex<double> v = to_cd(c);
      for (int a = 0; a < sig_.n; ++a) {
        for (int k = 0; k < m.zi[a]; ++k) v *= z[a];
        for (int k = 0; k < m.zj[a]; ++k) v *= z[a].conj();
      }
      for (int k = 0; k < m.l; ++k) v *= Complex<double>(u);
      acc += v;
    }
    return acc;
  }

  /// Evaluation of a real-valued series: the imaginary residue is checked
  /// and discarded.
  double eval(const std::vector<Complex<double>>& z, double u) const {
    Complex<double> v = eval_complex(z, u);
    double scale = std::max(1.0, std::abs(v.re));
    if (std::abs(v.im) > 1e-12 * scale)
      throw std::domain_error("eval of non-real series");
    return v.re;
  }

 private:
  Series compatible(const Series& y) const {
    if (sig_ != y.sig_) throw std::invalid_argument("signature mismatch");
    return Series(sig_, std::min(n_, y.n_));
  }

  Signature sig_{};
  int n_{10};
  std::map<Monomial, C> t_;
};

using SeriesR = Series<Rat>;
using SeriesD = Series<double>;

}  // namespace crnf
