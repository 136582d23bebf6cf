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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdlab/exactla/matrix.hpp"

namespace tdlab {

/// Dense univariate polynomial, coefficients in ascending degree, trailing zeros trimmed.
template <ExactField F>
class Polynomial {
 public:
  using scalar = typename F::scalar;

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, Vec<F> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const F& field, scalar c) { return Polynomial(field, Vec<F>{std::move(c)}); }
  static Polynomial one(const F& field) { return constant(field, field.one()); }
  /// The monic linear polynomial (lambda - root).
  static Polynomial linear(const F& field, const scalar& root) { return Polynomial(field, Vec<F>{-root, field.one()}); }

  /// prod (lambda - r) over the given roots; the empty product is 1.
  static Polynomial from_roots(const F& field, std::span<const scalar> roots) {
    Polynomial p = one(field);
    for (const auto& r : roots) p = p * linear(field, r);
    return p;
  }

  const F& field() const { return field_; }
  const Vec<F>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }
  scalar leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == field_.one(); }

  scalar eval(const scalar& x) const {
    scalar acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Coefficient vector padded (or required to fit) to the given length.
  Vec<F> padded(std::size_t len) const {
    if (coeffs_.size() > len) throw std::invalid_argument("polynomial degree exceeds padding length");
    Vec<F> out = coeffs_;
    out.resize(len, field_.zero());
    return out;
  }

  /// Divides by (lambda - root); returns the quotient and the remainder p(root).
  std::pair<Polynomial, scalar> divide_linear(const scalar& root) const {
    if (is_zero()) return {Polynomial(field_), field_.zero()};
    Vec<F> q(coeffs_.size() - 1, field_.zero());
    scalar carry = field_.zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      scalar cur = coeffs_[k] + carry * root;
      if (k == 0) return {Polynomial(field_, std::move(q)), cur};
      q[k - 1] = cur;
      carry = cur;
    }
    return {Polynomial(field_, std::move(q)), field_.zero()};
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Vec<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Polynomial(a.field_, std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Vec<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
    return Polynomial(a.field_, std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    Vec<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.field_, std::move(c));
  }
  friend Polynomial operator*(const scalar& s, const Polynomial& a) {
    Vec<F> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(a.field_, std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      bool unit = coeffs_[k] == field_.one();
      if (!unit || k == 0) s += coeffs_[k].to_string();
      if (k > 0) s += (unit ? "" : "*") + std::string("x") + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  F field_;
  Vec<F> coeffs_;
};

/// p(M) by Horner's rule.
template <ExactField F>
Matrix<F> eval_at_matrix(const Polynomial<F>& p, const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("eval_at_matrix: matrix not square");
  const F& field = m.field();
  Matrix<F> acc(field, m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c[k];
  }
  return acc;
}

}  // namespace tdlab
