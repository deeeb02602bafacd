#pragma once

#include <vector>

#include "cybmw/scalars.hpp"

namespace cybmw {

// Dense matrix over a scalar field K with exact arithmetic throughout.
template <class K>
class Matrix {
 public:
  Matrix(int rows, int cols, const K& fill)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw Error(Code::InvalidArgument, "negative matrix dimension");
  }

  static Matrix identity(int n, const K& like) {
    Matrix m(n, n, make_int<K>(like, 0));
    for (int i = 0; i < n; ++i) m.at(i, i) = make_int<K>(like, 1);
    return m;
  }
  static Matrix zero(int rows, int cols, const K& like) {
    return Matrix(rows, cols, make_int<K>(like, 0));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& at(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
  const K& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(Code::SizeMismatch, "matrix product shape mismatch");
    K zero = make_int<K>(data_.empty() ? o.data_[0] : data_[0], 0);
    Matrix r(rows_, o.cols_, zero);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = at(i, k);
        if (k_is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    return r;
  }
  Matrix scaled(const K& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!(data_[i] == o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!k_is_zero(x)) return false;
    return true;
  }

  Matrix pow(long e, const K& like) const {
    if (rows_ != cols_) throw Error(Code::SizeMismatch, "power of a non-square matrix");
    if (e < 0) return inverse().pow(-e, like);
    Matrix acc = identity(rows_, like);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  // Exact Gaussian elimination; throws DivisionByZero when singular.
  Matrix inverse() const {
    if (rows_ != cols_) throw Error(Code::SizeMismatch, "inverse of a non-square matrix");
    const int n = rows_;
    K like = n > 0 ? data_[0] : K{};
    Matrix a = *this;
    Matrix inv = identity(n, like);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int row = col; row < n; ++row)
        if (!k_is_zero(a.at(row, col))) {
          piv = row;
          break;
        }
      if (piv < 0) throw Error(Code::DivisionByZero, "singular matrix");
      if (piv != col) {
        for (int j = 0; j < n; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      K d = k_inv(a.at(col, col));
      for (int j = 0; j < n; ++j) {
        a.at(col, j) = a.at(col, j) * d;
        inv.at(col, j) = inv.at(col, j) * d;
      }
      for (int row = 0; row < n; ++row) {
        if (row == col) continue;
        K f = a.at(row, col);
        if (k_is_zero(f)) continue;
        for (int j = 0; j < n; ++j) {
          a.at(row, j) = a.at(row, j) - f * a.at(col, j);
          inv.at(row, j) = inv.at(row, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  K determinant() const {
    if (rows_ != cols_) throw Error(Code::SizeMismatch, "determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) throw Error(Code::InvalidArgument, "determinant of an empty matrix");
    K like = data_[0];
    Matrix a = *this;
    K det = make_int<K>(like, 1);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int row = col; row < n; ++row)
        if (!k_is_zero(a.at(row, col))) {
          piv = row;
          break;
        }
      if (piv < 0) return make_int<K>(like, 0);
      if (piv != col) {
        for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
        det = -det;
      }
      det = det * a.at(col, col);
      K d = k_inv(a.at(col, col));
      for (int row = col + 1; row < n; ++row) {
        K f = a.at(row, col) * d;
        if (k_is_zero(f)) continue;
        for (int j = col; j < n; ++j) a.at(row, j) = a.at(row, j) - f * a.at(col, j);
      }
    }
    return det;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(Code::SizeMismatch, "matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<K> data_;
};

}  // namespace cybmw
