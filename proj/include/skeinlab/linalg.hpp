#pragma once
// Matrices over HalfLaurent and exact rational linear algebra.

#include "skeinlab/scalar.hpp"

#include <stdexcept>
#include <optional>
#include <vector>

namespace skeinlab {

// Dense matrix over HalfLaurent.
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<HalfLaurent> data;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = HalfLaurent(1);
    return m;
  }
  HalfLaurent& operator()(size_t i, size_t j) { return data[i * cols + j]; }
  const HalfLaurent& operator()(size_t i, size_t j) const { return data[i * cols + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t k = 0; k < x.cols; ++k) {
        const HalfLaurent& v = x(i, k);
        if (v.is_zero()) continue;
        for (size_t j = 0; j < y.cols; ++j)
          if (!y(k, j).is_zero()) r(i, j) += v * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < x.data.size(); ++i) x.data[i] += y.data[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < x.data.size(); ++i) x.data[i] -= y.data[i];
    return x;
  }
  friend Matrix operator*(const HalfLaurent& c, Matrix x) {
    for (auto& v : x.data) v *= c;
    return x;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
  }
  bool is_zero() const {
    for (const auto& v : data)
      if (!v.is_zero()) return false;
    return true;
  }
};

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows * y.rows, x.cols * y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      if (x(i, j).is_zero()) continue;
      for (size_t k = 0; k < y.rows; ++k)
        for (size_t l = 0; l < y.cols; ++l)
          if (!y(k, l).is_zero()) r(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
    }
  return r;
}

// Dense matrix over the rationals, row-major.
struct RMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  RMatrix() = default;
  RMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(size_t i, size_t j) { return data[i * cols + j]; }
  const Rational& operator()(size_t i, size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const RMatrix& x, const RMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
  }
};

inline RMatrix specialize(const Matrix& m, const Rational& s0) {
  RMatrix r(m.rows, m.cols);
  for (size_t i = 0; i < m.data.size(); ++i) r.data[i] = m.data[i].specialize(s0);
  return r;
}

inline RMatrix transpose(const RMatrix& m) {
  RMatrix t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<size_t> rref(RMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t p = row;
    while (p < m.rows && m(p, col) == 0) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (size_t j = col; j < m.cols; ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline size_t rank(RMatrix m) { return rref(m).size(); }

// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> kernel(RMatrix m) {
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

// A solution of m x = b, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const RMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve: right-hand side has wrong length");
  RMatrix aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<Rational> x(m.cols);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols);
  return x;
}

inline RMatrix identity_rmatrix(size_t n) {
  RMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline RMatrix operator*(const RMatrix& x, const RMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
  RMatrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (size_t j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

// Inverse of a square matrix; throws when singular.
inline RMatrix inverse(const RMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: matrix is not square");
  size_t n = m.rows;
  RMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  RMatrix out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Rows of x and y span the same space.
inline bool same_row_space(const RMatrix& x, const RMatrix& y) {
  if (x.cols != y.cols) return false;
  size_t rx = rank(x), ry = rank(y);
  if (rx != ry) return false;
  RMatrix both(x.rows + y.rows, x.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) both(i, j) = x(i, j);
  for (size_t i = 0; i < y.rows; ++i)
    for (size_t j = 0; j < y.cols; ++j) both(x.rows + i, j) = y(i, j);
  return rank(both) == rx;
}

}  // namespace skeinlab
