/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdlab/exactla/field.hpp"

namespace tdlab {

template <ExactField F>
using Vec = std::vector<typename F::scalar>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using field_type = F;
  using scalar = typename F::scalar;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix diagonal(const F& field, std::span<const scalar> diag) {
    Matrix m(field, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  /// Builds from a nested list of small integers (test and generator convenience).
  static Matrix from_ints(const F& field, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const scalar> data() const { return data_; }
  std::span<const scalar> row(std::size_t r) const {
    return std::span<const scalar>(data_).subspan(r * cols_, cols_);
  }
  Vec<F> column(std::size_t c) const {
    Vec<F> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  /// Row-major copy of the entries, used as a coordinate vector in span computations.
  const Vec<F>& flatten() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  scalar trace() const {
    require_square("trace");
    scalar s = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  Matrix pow(std::size_t k) const {
    require_square("pow");
    Matrix result = identity(field_, rows_);
    for (std::size_t i = 0; i < k; ++i) result = result * *this;
    return result;
  }

  Vec<F> apply(std::span<const scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vec<F> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      scalar s = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
      }
      out[i] = std::move(s);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const scalar& s) { return a *= s; }
  friend Matrix operator*(const scalar& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    if (!(a.field_ == b.field_)) throw std::invalid_argument("matrix product: field mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const scalar& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void require_square(const char* what) const {
    if (!is_square()) throw std::invalid_argument(std::string(what) + ": matrix not square");
  }
  void require_same_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) {
      throw std::invalid_argument(std::string("matrix ") + what + ": shape or field mismatch");
    }
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec<F> data_;
};

}  // namespace tdlab
