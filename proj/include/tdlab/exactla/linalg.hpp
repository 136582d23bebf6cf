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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tdlab/exactla/matrix.hpp"

namespace tdlab {

template <ExactField F>
struct RrefResult {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry in each column.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
  using S = typename F::scalar;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    }
    S inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      S factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column.
template <ExactField F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
  const F& field = m.field();
  auto [red, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < rk; ++k) v[pivots[k]] = -red(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A subspace of K^n held as a reduced row-echelon basis.
///
/// Rows are kept sorted by pivot column and fully reduced, so two subspaces are
/// equal exactly when their row lists are equal, and membership is decided by
/// reducing against the pivots.
template <ExactField F>
class SubspaceBasis {
 public:
  using scalar = typename F::scalar;

  SubspaceBasis(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v modulo the span (zero iff v is a member). Linear in v.
  Vec<F> reduce(Vec<F> v) const {
    check_size(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p].is_zero()) continue;
      scalar factor = v[p];
      const auto& row = rows_[k];
      for (std::size_t j = p; j < ambient_; ++j) {
        if (!row[j].is_zero()) v[j] -= factor * row[j];
      }
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const scalar& x) { return x.is_zero(); });
  }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    scalar inv = r[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j) r[j] *= inv;
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      scalar factor = row[p];
      for (std::size_t j = p; j < ambient_; ++j) {
        if (!r[j].is_zero()) row[j] -= factor * r[j];
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = static_cast<std::ptrdiff_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
  }

  /// Inserts every vector; returns how many increased the dimension.
  std::size_t insert_all(const std::vector<Vec<F>>& vs) {
    std::size_t grown = 0;
    for (const auto& v : vs) grown += insert(v) ? 1 : 0;
    return grown;
  }

  bool contains_all(const SubspaceBasis& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec<F>& v) { return contains(v); });
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check_size(const Vec<F>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField F>
SubspaceBasis<F> span_of(const F& field, std::size_t ambient_dim, const std::vector<Vec<F>>& vs) {
  SubspaceBasis<F> s(field, ambient_dim);
  s.insert_all(vs);
  return s;
}

/// Dimension of the span of equally shaped matrices viewed as vectors.
template <ExactField F>
std::size_t span_rank(std::span<const Matrix<F>> mats) {
  if (mats.empty()) return 0;
  const auto& first = mats.front();
  SubspaceBasis<F> s(first.field(), first.rows() * first.cols());
  for (const auto& m : mats) {
    if (m.rows() != first.rows() || m.cols() != first.cols() || !(m.field() == first.field())) {
      throw std::invalid_argument("span_rank: shape or field mismatch");
    }
    s.insert(m.flatten());
  }
  return s.dim();
}

template <ExactField F>
std::size_t span_rank(const std::vector<Matrix<F>>& mats) {
  return span_rank(std::span<const Matrix<F>>(mats));
}

/// Coefficients c with sum c_k * generators[k] == target, when a solution exists.
/// With independent generators the solution is unique.
template <ExactField F>
std::optional<Vec<F>> solve_combination(const F& field, const std::vector<Vec<F>>& generators,
                                        const Vec<F>& target) {
  const std::size_t len = target.size();
  const std::size_t g = generators.size();
  Matrix<F> aug(field, len, g + 1);
  for (std::size_t k = 0; k < g; ++k) {
    if (generators[k].size() != len) throw std::invalid_argument("solve_combination: length mismatch");
    for (std::size_t r = 0; r < len; ++r) aug(r, k) = generators[k][r];
  }
  for (std::size_t r = 0; r < len; ++r) aug(r, g) = target[r];
  auto [red, rk, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == g) return std::nullopt;
  Vec<F> coeffs(g, field.zero());
  for (std::size_t k = 0; k < rk; ++k) coeffs[pivots[k]] = red(k, g);
  return coeffs;
}

}  // namespace tdlab
