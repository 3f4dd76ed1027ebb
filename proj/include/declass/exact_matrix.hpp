#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "declass/gf.hpp"
#include "declass/rational.hpp"

namespace declass {

/// Dense matrix over an exact scalar type K (Rational or GfElem).  K needs
/// the four arithmetic operators, unary minus, ==, an is_zero() member, and
/// the scalar_zero/scalar_one helper overloads.  All shapes here are small
/// (at most a few dozen), so plain Gaussian elimination with exact division
/// is the right tool; nothing is ever rounded.
template <class K>
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, const K& fill)
      : r_(rows), c_(cols), a_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Mat: empty shape");
  }

  static Mat identity(std::size_t n, const K& one) {
    Mat m(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("Mat: empty shape");
    Mat m(rows.size(), rows.front().size(), rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw std::invalid_argument("Mat: ragged rows");
      for (std::size_t j = 0; j < m.c_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  K& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Mat operator+(const Mat& o) const {
    check_shape(o);
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] + o.a_[i];
    return m;
  }

  Mat operator-(const Mat& o) const {
    check_shape(o);
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] - o.a_[i];
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat m(r_, o.c_, a_[0] - a_[0]);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t l = 0; l < c_; ++l) {
        const K& f = at(i, l);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < o.c_; ++j) m.at(i, j) = m.at(i, j) + f * o.at(l, j);
      }
    return m;
  }

  /// this - t*I
  Mat shifted(const K& t) const {
    if (r_ != c_) throw std::invalid_argument("Mat: shift needs a square matrix");
    Mat m = *this;
    for (std::size_t i = 0; i < r_; ++i) m.at(i, i) = m.at(i, i) - t;
    return m;
  }

  std::size_t rank() const {
    std::vector<K> w = a_;
    auto e = [&](std::size_t i, std::size_t j) -> K& { return w[i * c_ + j]; };
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c_ && rk < r_; ++col) {
      std::size_t piv = rk;
      while (piv < r_ && e(piv, col).is_zero()) ++piv;
      if (piv == r_) continue;
      for (std::size_t j = col; j < c_; ++j) std::swap(e(rk, j), e(piv, j));
      for (std::size_t i = rk + 1; i < r_; ++i) {
        if (e(i, col).is_zero()) continue;
        K f = e(i, col) / e(rk, col);
        for (std::size_t j = col; j < c_; ++j) e(i, j) = e(i, j) - f * e(rk, j);
      }
      ++rk;
    }
    return rk;
  }

  std::size_t kernel_dim() const { return c_ - rank(); }

  /// Basis of the right kernel, one vector per free column of the reduced
  /// echelon form.
  std::vector<std::vector<K>> kernel_basis() const {
    const K zero = scalar_zero(a_[0]);
    const K one = scalar_one(a_[0]);
    std::vector<K> w = a_;
    auto e = [&](std::size_t i, std::size_t j) -> K& { return w[i * c_ + j]; };
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t piv = row;
      while (piv < r_ && e(piv, col).is_zero()) ++piv;
      if (piv == r_) continue;
      for (std::size_t j = 0; j < c_; ++j) std::swap(e(row, j), e(piv, j));
      K d = e(row, col);
      for (std::size_t j = 0; j < c_; ++j) e(row, j) = e(row, j) / d;
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row || e(i, col).is_zero()) continue;
        K f = e(i, col);
        for (std::size_t j = 0; j < c_; ++j) e(i, j) = e(i, j) - f * e(row, j);
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(c_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < c_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<K> v(c_, zero);
      v[free] = one;
      for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = zero - e(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Coefficients of det(tI - A), highest degree first: out[0] = 1 and
  /// out[i] multiplies t^{n-i}.  Samuelson's division-free recurrence, so it
  /// is valid over any exact field, including small characteristic.
  std::vector<K> charpoly() const {
    if (r_ != c_) throw std::invalid_argument("Mat: charpoly needs a square matrix");
    const std::size_t n = r_;
    const K zero = scalar_zero(a_[0]);
    const K one = scalar_one(a_[0]);
    std::vector<K> c{one};
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<K> t(m + 1, zero);
      t[0] = one;
      t[1] = zero - at(m - 1, m - 1);
      if (m >= 2) {
        std::vector<K> v(m - 1, zero);
        for (std::size_t i = 0; i + 1 < m; ++i) v[i] = at(i, m - 1);
        for (std::size_t s = 2; s <= m; ++s) {
          K acc = zero;
          for (std::size_t i = 0; i + 1 < m; ++i) acc = acc + at(m - 1, i) * v[i];
          t[s] = zero - acc;
          if (s < m) {
            std::vector<K> nv(m - 1, zero);
            for (std::size_t i = 0; i + 1 < m; ++i)
              for (std::size_t j = 0; j + 1 < m; ++j) nv[i] = nv[i] + at(i, j) * v[j];
            v = std::move(nv);
          }
        }
      }
      std::vector<K> nc(m + 1, zero);
      for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t l = 0; l < c.size() && l <= j; ++l) nc[j] = nc[j] + t[j - l] * c[l];
      c = std::move(nc);
    }
    return c;
  }

 private:
  void check_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch");
  }

  std::size_t r_, c_;
  std::vector<K> a_;
};

}  // namespace declass
