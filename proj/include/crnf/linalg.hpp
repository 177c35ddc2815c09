#pragma once

#include <stdexcept>
#include <vector>

#include "complexk.hpp"

namespace crnf {

/// Minimal dense matrix over Complex<K>; used for the small (n+2)-square
/// group matrices and exact solves. Heavy float-only work goes to Eigen.
template <class K>
struct Mat {
  std::size_t rows{0}, cols{0};
  std::vector<Complex<K>> d;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), d(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex<K>(K(1));
    return m;
  }

  Complex<K>& operator()(std::size_t i, std::size_t j) { return d[i * cols + j]; }
  const Complex<K>& operator()(std::size_t i, std::size_t j) const {
    return d[i * cols + j];
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul shape");
    Mat r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols; ++j)
          r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
  }
  friend Mat operator*(const Complex<K>& s, const Mat& a) {
    Mat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = s * a.d[i];
    return r;
  }

  Mat conj_transpose() const {
    Mat r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j).conj();
    return r;
  }

  std::vector<Complex<K>> apply(const std::vector<Complex<K>>& v) const {
    if (v.size() != cols) throw std::invalid_argument("matvec shape");
    std::vector<Complex<K>> r(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
};

/// Gauss-Jordan inverse. Pivots on the entry of largest double magnitude,
/// which is also a safe exact pivot choice.
template <class K>
Mat<K> inverse(Mat<K> a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse of non-square");
  std::size_t n = a.rows;
  Mat<K> inv = Mat<K>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = abs_approx(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      double m = abs_approx(a(r, col));
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (a(piv, col).is_zero()) throw std::domain_error("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Complex<K> p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Complex<K> f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Fraction-free (Bareiss) determinant of an exact integer matrix.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Particular solution of A x = b over the rationals by Gauss elimination;
/// free variables are set to zero. Returns false when inconsistent.
/// Extra all-zero rows are tolerated.
inline bool solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                           std::vector<Rat>& x) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Rat p = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= p;
    b[r] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  x.assign(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace crnf
