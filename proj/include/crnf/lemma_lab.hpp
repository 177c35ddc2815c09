#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadext.hpp"

namespace crnf {

// ---------------------------------------------------------------------------
// Band matrix families. Each is a first-row border over a tridiagonal body:
//   row 0:   f[0] f[1] ... f[dim-1]
//   row i>0: sub[i] at col i-1, diag[i] at col i, super[i] at col i+1.
// A_m and C_m are plain tridiagonal (f absent, row 0 tridiagonal too).
// ---------------------------------------------------------------------------

enum class BandFamily { A, C, B, B2, B3, E };

struct BandMatrixSpec {
  BandFamily family;
  long m;
  long s{0};  // only for E_m(s)
};

namespace detail {

struct Tridiag {
  std::vector<Int> sub, diag, super;  // sub[0], super[last] unused
  std::size_t dim() const { return diag.size(); }
};

inline Tridiag tridiag_A(long m) {
  Tridiag t;
  std::size_t d = m + 1;
  t.sub.resize(d);
  t.diag.resize(d);
  t.super.resize(d);
  for (long i = 0; i <= m; ++i) {
    t.diag[i] = 3 * i;
    if (i > 0) t.sub[i] = m - i + 1;
    if (i < m) t.super[i] = 2 * i + 2;
  }
  return t;
}

inline Tridiag tridiag_C(long m) {
  Tridiag t = tridiag_A(m);
  for (auto& v : t.diag) v -= (m - 4);
  return t;
}

// E_m(t): t x t, the lower-right continuation ending in diag 2m+4.
inline Tridiag tridiag_E(long m, long tdim) {
  if (tdim < 1 || tdim > m + 1) throw std::invalid_argument("E_m(s) range");
  Tridiag t;
  long s = tdim - 1;
  t.sub.resize(tdim);
  t.diag.resize(tdim);
  t.super.resize(tdim);
  for (long i = 0; i < tdim; ++i) {
    t.diag[i] = 2 * m - 3 * s + 4 + 3 * i;
    if (i > 0) t.sub[i] = s - i + 1;
    if (i < tdim - 1) t.super[i] = 2 * (m - s + 1 + i);
  }
  return t;
}

// Tridiagonal bodies of the bordered families; row 0 entries are unused.
inline Tridiag body_B(long m) { return tridiag_C(m); }

inline Tridiag body_B2(long m) {
  if (m < 3) throw std::invalid_argument("B_m(2) needs m >= 3");
  Tridiag t;
  std::size_t d = m;
  t.sub.resize(d);
  t.diag.resize(d);
  t.super.resize(d);
  t.diag[0] = 9 - m;  // C_m(2) corner; unused by the bordered det
  t.super[0] = 4;
  for (long i = 1; i < m; ++i) {
    t.sub[i] = m - i;
    t.diag[i] = 3 * i + 7 - m;
    if (i < m - 1) t.super[i] = 2 * i + 4;
  }
  return t;
}

inline Tridiag body_B3(long m) {
  if (m < 4) throw std::invalid_argument("B_m(3) needs m >= 4");
  Tridiag t;
  std::size_t d = m - 1;
  t.sub.resize(d);
  t.diag.resize(d);
  t.super.resize(d);
  t.diag[0] = 14 - m;  // C_m(3) corner
  t.super[0] = 6;
  for (long i = 1; i < m - 1; ++i) {
    t.sub[i] = m - 1 - i;
    t.diag[i] = 3 * i + 10 - m;
    if (i < m - 2) t.super[i] = 2 * i + 6;
  }
  return t;
}

inline std::vector<Int> first_row_iota(long start, std::size_t dim) {
  std::vector<Int> f(dim);
  for (std::size_t j = 0; j < dim; ++j) f[j] = Int(start + static_cast<long>(j));
  return f;
}

// det of the tridiagonal submatrix on rows/cols k..dim-1, all k.
inline std::vector<Int> tail_dets(const Tridiag& t) {
  std::size_t d = t.dim();
  std::vector<Int> r(d + 2);
  r[d] = 1;
  r[d + 1] = 1;  // sentinel, never multiplied in
  for (std::size_t k = d; k-- > 0;) {
    Int v = t.diag[k] * r[k + 1];
    if (k + 1 < d) v -= t.super[k] * t.sub[k + 1] * r[k + 2];
    r[k] = v;
  }
  return r;
}

inline Int tridiag_det(const Tridiag& t) { return tail_dets(t)[0]; }

// det of [first row f over tridiagonal body]: cofactor expansion along
// row 0; the minor at column j splits into an upper-bidiagonal block with
// determinant sub[1]*...*sub[j] and the tridiagonal tail from j+1.
inline Int bordered_det(const std::vector<Int>& f, const Tridiag& t) {
  std::vector<Int> tails = tail_dets(t);
  Int det = 0, subprod = 1;
  for (std::size_t j = 0; j < t.dim(); ++j) {
    Int term = f[j] * subprod * tails[j + 1];
    det += (j % 2 == 0) ? term : -term;
    if (j + 1 < t.dim()) subprod *= t.sub[j + 1];
  }
  return det;
}

}  // namespace detail

/// Dense integer matrix of the requested family, entry-exact.
inline std::vector<std::vector<Int>> build(const BandMatrixSpec& spec) {
  using detail::Tridiag;
  long m = spec.m;
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  Tridiag t;
  std::optional<std::vector<Int>> first;
  switch (spec.family) {
    case BandFamily::A: t = detail::tridiag_A(m); break;
    case BandFamily::C: t = detail::tridiag_C(m); break;
    case BandFamily::E: t = detail::tridiag_E(m, spec.s); break;
    case BandFamily::B:
      t = detail::body_B(m);
      first = detail::first_row_iota(1, t.dim());
      break;
    case BandFamily::B2:
      t = detail::body_B2(m);
      first = detail::first_row_iota(2, t.dim());
      break;
    case BandFamily::B3:
      t = detail::body_B3(m);
      first = detail::first_row_iota(3, t.dim());
      break;
  }
  std::size_t d = t.dim();
  std::vector<std::vector<Int>> a(d, std::vector<Int>(d, Int(0)));
  for (std::size_t i = 0; i < d; ++i) {
    if (i == 0 && first) {
      a[0] = *first;
      continue;
    }
    if (i > 0) a[i][i - 1] = t.sub[i];
    a[i][i] = t.diag[i];
    if (i + 1 < d) a[i][i + 1] = t.super[i];
  }
  return a;
}

/// det E_m(s) through the three-term recurrence
///   det E_m(s+1) = (2m+4-3s) det E_m(s) - 2 s (m-s+1) det E_m(s-1)
/// with det E_m(1) = 2m+4 and det E_m(0) := 1.
inline std::vector<Int> det_E_sequence(long m) {
  std::vector<Int> d(m + 2);
  d[0] = 1;
  d[1] = 2 * m + 4;
  for (long s = 1; s <= m; ++s)
    d[s + 1] = Int(2 * m + 4 - 3 * s) * d[s] - Int(2 * s * (m - s + 1)) * d[s - 1];
  return d;
}

inline Int det_E(long m, long s) {
  if (s < 1 || s > m + 1) throw std::invalid_argument("det_E range");
  return det_E_sequence(m)[s];
}

inline Int det_C(long m) { return detail::tridiag_det(detail::tridiag_C(m)); }
inline Int det_A(long m) { return detail::tridiag_det(detail::tridiag_A(m)); }
inline Int det_B(long m) {
  auto t = detail::body_B(m);
  return detail::bordered_det(detail::first_row_iota(1, t.dim()), t);
}
inline Int det_B2(long m) {
  auto t = detail::body_B2(m);
  return detail::bordered_det(detail::first_row_iota(2, t.dim()), t);
}
inline Int det_B3(long m) {
  auto t = detail::body_B3(m);
  return detail::bordered_det(detail::first_row_iota(3, t.dim()), t);
}

inline Rat delta_inv(long m) {
  auto d = det_E_sequence(m);
  if (d[m] == 0) throw std::logic_error("det E_m(m) vanished");
  return Rat(d[m + 1]) / Rat(d[m]);
}

/// delta_m defined by Delta(m)^{-1} = (4-m)(1-delta_m); undefined at m=4.
inline Rat delta_m(long m) {
  if (m == 4) throw std::domain_error("delta_m undefined at m=4");
  return 1 - delta_inv(m) / Rat(4 - m);
}

/// eta(m) = det E_m(m)/det E_m(m-1); with det E_m(0) := 1 this is defined
/// for every m >= 1 and agrees with 2m/(4-m-Delta(m)^{-1}).
inline Rat eta(long m) {
  auto d = det_E_sequence(m);
  if (d[m - 1] == 0) throw std::logic_error("det E_m(m-1) vanished");
  return Rat(d[m]) / Rat(d[m - 1]);
}

/// The table (1.19) candidate for m=1 under the shifted indexing:
/// det E_1(2)/det E_1(1) = 16/6 = 8/3 = 2.66...
inline Rat eta1_shifted() { return Rat(det_E(1, 2)) / Rat(det_E(1, 1)); }

/// Binomial weights of the sum (1.10):
///   wA = lambda2/(lambda2-lambda1), wB = -lambda1/(lambda2-lambda1).
inline QuadExt weight_A() { return lambda2() / QuadExt::sqrt17(); }
inline QuadExt weight_B() { return (-lambda1()) / QuadExt::sqrt17(); }

/// Delta(m) as the exact Q(sqrt17) binomial sum; rationality of the result
/// (the sqrt17 part cancels) is a built-in consistency check.
inline QuadExt delta_sum_exact(long m) {
  QuadExt wA = weight_A(), wB = weight_B();
  std::vector<QuadExt> pa(m + 1), pb(m + 1);
  pa[0] = QuadExt(Rat(1));
  pb[0] = QuadExt(Rat(1));
  for (long k = 1; k <= m; ++k) {
    pa[k] = pa[k - 1] * wA;
    pb[k] = pb[k - 1] * wB;
  }
  QuadExt sum;
  for (long k = 0; k <= m; ++k) {
    QuadExt denom(Rat(m + 8, 2), Rat(m - 2 * k, 2));  // k l1 + (m-k) l2 - (m-4)
    QuadExt term = QuadExt(Rat(binomial(m, k))) * pa[k] * pb[m - k] / denom;
    sum += term;
  }
  return sum;
}

inline BigFloat delta_sum(long m, unsigned bits) {
  PrecisionGuard g(bits);
  BigFloat r17 = sqrt(BigFloat(17));
  BigFloat l1 = (3 - r17) / 2, l2 = (3 + r17) / 2;
  BigFloat wA = l2 / r17, wB = -l1 / r17;
  BigFloat sum = 0;
  for (long k = 0; k <= m; ++k) {
    BigFloat denom = k * l1 + (m - k) * l2 - (m - 4);
    sum += to_bigfloat(binomial(m, k)) * pow(wA, int(k)) * pow(wB, int(m - k)) / denom;
  }
  return sum;
}

/// F_1(m) = 192 m^3 C(m, [0.7m]) wA^[0.7m] wB^(m-[0.7m]);
/// [0.7m] is floor(7m/10) in exact integers.
inline long floor_07(long m) { return (7 * m) / 10; }

inline BigFloat F1(long m, unsigned bits) {
  PrecisionGuard g(bits);
  BigFloat r17 = sqrt(BigFloat(17));
  BigFloat wA = (3 + r17) / (2 * r17), wB = (r17 - 3) / (2 * r17);
  long j = floor_07(m);
  BigFloat v = 192 * to_bigfloat(Int(m) * m * m) * to_bigfloat(binomial(m, j));
  return v * pow(wA, int(j)) * pow(wB, int(m - j));
}

inline BigFloat F2(long m, unsigned bits) {
  PrecisionGuard g(bits);
  BigFloat r17 = sqrt(BigFloat(17));
  BigFloat lead = BigFloat(1) / 5 - BigFloat(m + 8) / (2 * m * r17);
  if (lead <= 0) throw std::domain_error("F2 domain: 1/5 - (m+8)/(2m sqrt17) <= 0");
  return sqrt(BigFloat(2) / (17 * m)) / lead;
}

/// Eigenvalues of A_m by a dense solve, ascending.
inline std::vector<double> eigs_A(long m) {
  if (m > 200) throw std::invalid_argument("dense eigensolve budget is m <= 200");
  auto a = build({BandFamily::A, m});
  Eigen::MatrixXd M(m + 1, m + 1);
  for (long i = 0; i <= m; ++i)
    for (long j = 0; j <= m; ++j) M(i, j) = a[i][j].convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> es(M);
  std::vector<double> ev(m + 1);
  for (long i = 0; i <= m; ++i) ev[i] = es.eigenvalues()(i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Printed table (1.19), indexed by m = 1..30.
inline const std::vector<double>& table119_printed() {
  static const std::vector<double> v = {
      2.66,  4.5,    2.75,   0.36,  -5.24,  12.05, 0.64,  -5.36,
      35.53, -0.11,  -7.14,  39.86, -1.96,  -9.84, 19.83, -4.61,
      -13.56, 6.45,  -7.76,  -19.12, -1.65, -11.21, -31.81, -7.43,
      -14.96, 118.96, -12.12, -19.25, -3.97, -16.30};
  return v;
}

struct F1DominationReport {
  long m_lo{0}, m_hi{0};
  bool domination_ok{true};   // F1(k) <= F1(m) for k >= m+11
  bool tail_bound_ok{true};   // F1(m) <= 5.33e-4 on [400, min(m_hi,1000)]
  bool ratio_ok{true};        // branch formulas for F1(m+1)/F1(m)
  long first_fail_m{-1}, first_fail_k{-1};
};

inline F1DominationReport f1_domination_check(long m_lo, long m_hi,
                                              unsigned bits = 256) {
  if (!(100 <= m_lo && m_lo < m_hi && m_hi <= 2000))
    throw std::invalid_argument("f1_domination_check range");
  F1DominationReport rep{m_lo, m_hi};
  PrecisionGuard g(bits);
  std::vector<BigFloat> f(m_hi + 1);
  for (long m = m_lo; m <= m_hi; ++m) f[m] = F1(m, bits);

  std::vector<BigFloat> sufmax(m_hi + 2);
  sufmax[m_hi + 1] = 0;
  for (long k = m_hi; k >= m_lo; --k)
    sufmax[k] = (k == m_hi || f[k] > sufmax[k + 1]) ? f[k] : sufmax[k + 1];
  for (long m = m_lo; m + 11 <= m_hi; ++m)
    if (sufmax[m + 11] > f[m]) {
      rep.domination_ok = false;
      rep.first_fail_m = m;
      for (long k = m + 11; k <= m_hi; ++k)
        if (f[k] > f[m]) {
          rep.first_fail_k = k;
          break;
        }
      break;
    }

  for (long m = std::max<long>(400, m_lo); m <= std::min<long>(m_hi, 1000); ++m)
    if (f[m] > BigFloat("5.33e-4")) rep.tail_bound_ok = false;

  BigFloat r17 = sqrt(BigFloat(17));
  BigFloat wA = (3 + r17) / (2 * r17), wB = (r17 - 3) / (2 * r17);
  for (long m = m_lo; m < std::min(m_hi, m_lo + 200); ++m) {
    long j = floor_07(m);
    bool bump = floor_07(m + 1) != j;
    BigFloat cube = pow(BigFloat(1) + BigFloat(1) / m, 3);
    BigFloat expect = bump ? wA * cube * BigFloat(m + 1) / (j + 1)
                           : wB * cube * BigFloat(m + 1) / (m - j + 1);
    BigFloat got = f[m + 1] / f[m];
    if (abs(got - expect) > abs(expect) * pow(BigFloat(2), -int(bits) + 40))
      rep.ratio_ok = false;
  }
  return rep;
}

struct LemmaRecord {
  long m{};
  Int detE_top;   // det E_m(m+1) = det C_m
  Int detE_mid;   // det E_m(m)
  Rat eta_val;
  Rat dinv;                      // Delta(m)^{-1}
  std::optional<Rat> delta;      // delta_m (absent at m=4)
  bool eta_formula_ok{true};     // eta == 2m/(4-m-Delta^{-1})
  bool dinv_ne_4{true};
  bool dinv_ne_line{true};       // != -4/3 (m-3)
  bool b2_nonzero{true}, b3_nonzero{true};
  bool b2_iff_ok{true}, b3_iff_ok{true};
  bool bc_quarter_ok{true};      // 4 det B_m == det C_m (checked m <= bc_max)
  bool delta_bound_ok{true};     // |delta_m| <= 0.2 for m >= 30
  bool table_ok{true};           // |eta - printed| <= 0.02 for m <= 30
  bool pass() const {
    return eta_formula_ok && dinv_ne_4 && dinv_ne_line && b2_nonzero &&
           b3_nonzero && b2_iff_ok && b3_iff_ok && bc_quarter_ok &&
           delta_bound_ok && table_ok;
  }
};

struct LemmaReport {
  long m_max{};
  std::vector<LemmaRecord> records;
  Rat eta1_formula;  // eta(1) via the recurrence convention det E_1(0) = 1
  Rat eta1_alt;      // det E_1(2)/det E_1(1), matching the printed 2.66...
  bool all_pass{true};
};

inline LemmaReport nonsingularity_audit(long m_max, long bc_max = 60) {
  if (m_max < 1) throw std::invalid_argument("m_max >= 1");
  LemmaReport rep;
  rep.m_max = m_max;
  rep.eta1_formula = eta(1);
  rep.eta1_alt = eta1_shifted();
  const Rat bound(1, 5);
  for (long m = 1; m <= m_max; ++m) {
    LemmaRecord rec;
    rec.m = m;
    auto d = det_E_sequence(m);
    rec.detE_top = d[m + 1];
    rec.detE_mid = d[m];
    rec.eta_val = Rat(d[m]) / Rat(d[m - 1]);
    rec.dinv = Rat(d[m + 1]) / Rat(d[m]);
    rec.eta_formula_ok = rec.eta_val == Rat(2 * m) / (Rat(4 - m) - rec.dinv);
    rec.dinv_ne_4 = rec.dinv != 4;
    rec.dinv_ne_line = rec.dinv != Rat(-4 * (m - 3), 3);
    if (m != 4) {
      rec.delta = 1 - rec.dinv / Rat(4 - m);
      if (m >= 30) rec.delta_bound_ok = rat_abs(*rec.delta) <= bound;
    }
    if (m >= 3) {
      Int b2 = det_B2(m);
      rec.b2_nonzero = b2 != 0;
      rec.b2_iff_ok = (b2 != 0) == rec.dinv_ne_4;
    }
    if (m >= 4) {
      Int b3 = det_B3(m);
      rec.b3_nonzero = b3 != 0;
      rec.b3_iff_ok = (b3 != 0) == rec.dinv_ne_line;
    }
    if (m <= bc_max) rec.bc_quarter_ok = 4 * det_B(m) == det_C(m);
    if (m >= 2 && m <= 30) {
      double printed = table119_printed()[m - 1];
      rec.table_ok = std::abs(rat_to_double(rec.eta_val) - printed) <= 0.02;
    }
    rep.all_pass = rep.all_pass && rec.pass();
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace crnf
