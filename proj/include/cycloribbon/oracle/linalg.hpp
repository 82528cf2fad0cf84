#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "cycloribbon/rational.hpp"

namespace cycloribbon::oracle {

using SparseVector = std::map<std::size_t, Rational>;

inline void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

/// Row echelon form keyed by leading (smallest) index, pivots normalized to 1.
class EchelonBasis {
 public:
  /// Brings v to normal form: no entries left at pivot indices.
  SparseVector reduce(SparseVector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      const auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::size_t k = it->first;
      const Rational a = -it->second;
      axpy(v, a, row->second);
      it = v.upper_bound(k);
    }
    return v;
  }

  /// Returns true if v was independent of the current rows.
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Rational lead = v.begin()->second;
    for (auto& [k, x] : v) x /= lead;
    const std::size_t pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool is_pivot(std::size_t k) const { return rows_.count(k) != 0; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

  /// Clears every non-leading entry that sits at another pivot.
  void make_reduced() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseVector& row = it->second;
      const Rational one = row.begin()->second;
      row.erase(row.begin());
      row = reduce(std::move(row));
      row.emplace(it->first, one);
    }
  }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

/// Basis of {x in Q^dim : row . x = 0 for every row}.
inline std::vector<SparseVector> kernel(const std::vector<SparseVector>& rows, std::size_t dim) {
  EchelonBasis e;
  for (const auto& r : rows) e.insert(r);
  e.make_reduced();
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < dim; ++f) {
    if (e.is_pivot(f)) continue;
    SparseVector v{{f, Rational(1)}};
    for (const auto& [p, row] : e.rows()) {
      const auto it = row.find(f);
      if (it != row.end()) v[p] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Dense square-or-rectangular rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t d) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  SparseVector column(std::size_t j) const {
    SparseVector v;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, j) != 0) v.emplace(i, (*this)(i, j));
    return v;
  }

  SparseVector row(std::size_t i) const {
    SparseVector v;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) v.emplace(j, (*this)(i, j));
    return v;
  }

  SparseVector apply(const SparseVector& x) const {
    SparseVector y;
    for (const auto& [j, v] : x)
      for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, j) != 0) {
          auto [it, ins] = y.try_emplace(i, 0);
          it->second += (*this)(i, j) * v;
          if (it->second == 0) y.erase(it);
        }
    return y;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& a) {
    for (auto& x : data_) x *= a;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace cycloribbon::oracle
