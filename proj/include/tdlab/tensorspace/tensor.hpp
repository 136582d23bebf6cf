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
#include <stdexcept>
#include <vector>

#include "tdlab/exactla/linalg.hpp"
#include "tdlab/exactla/polynomial.hpp"
#include "tdlab/tdcore/system.hpp"

namespace tdlab {

/// Element of D (x) D* (x) D in the pure-power basis A^i (x) A*^t (x) A^j,
/// coordinate (i,t,j) stored at i(d+1)^2 + t(d+1) + j.
template <ExactField F>
struct TensorElement {
  std::size_t d = 0;
  Vec<F> coeffs;

  static std::size_t index(std::size_t d, std::size_t i, std::size_t t, std::size_t j) {
    const std::size_t m = d + 1;
    return (i * m + t) * m + j;
  }
  static std::size_t size(std::size_t d) { return (d + 1) * (d + 1) * (d + 1); }

  const typename F::scalar& at(std::size_t i, std::size_t t, std::size_t j) const { return coeffs[index(d, i, t, j)]; }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// x (x) y (x) z for coordinate vectors of length d+1 in the respective power bases.
template <ExactField F>
TensorElement<F> pure_tensor(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
  if (x.empty() || x.size() != y.size() || y.size() != z.size()) {
    throw std::invalid_argument("pure_tensor: coordinate vectors must share length d+1 >= 1");
  }
  const std::size_t d = x.size() - 1;
  const auto zero = x.front() - x.front();
  TensorElement<F> out{d, Vec<F>(TensorElement<F>::size(d), zero)};
  for (std::size_t i = 0; i <= d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t t = 0; t <= d; ++t) {
      if (y[t].is_zero()) continue;
      auto xy = x[i] * y[t];
      for (std::size_t j = 0; j <= d; ++j) {
        if (!z[j].is_zero()) out.coeffs[TensorElement<F>::index(d, i, t, j)] = xy * z[j];
      }
    }
  }
  return out;
}

/// X (x) Y (x) Z -> Z (x) Y (x) X on coordinates.
template <ExactField F>
TensorElement<F> transpose_dd(const TensorElement<F>& v) {
  TensorElement<F> out = v;
  const std::size_t d = v.d;
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t t = 0; t <= d; ++t)
      for (std::size_t j = 0; j <= d; ++j) out.coeffs[TensorElement<F>::index(d, i, t, j)] = v.at(j, t, i);
  return out;
}

template <ExactField F>
Vec<F> transpose_dd(const Vec<F>& coeffs, std::size_t d) {
  return transpose_dd(TensorElement<F>{d, coeffs}).coeffs;
}

enum class Middle { PowerT, TauStarT, EStar0 };

/// Coordinates of the elements of D and D* needed by the tensor computations,
/// all expressed in the power bases {A^i} and {A*^t}.
template <ExactField F>
class TensorSpace {
 public:
  explicit TensorSpace(TdSystem<F> sys) : sys_(std::move(sys)) {
    const F& f = sys_.field;
    const std::size_t d = sys_.d;
    for (std::size_t k = 0; k <= d; ++k) {
      Vec<F> e(d + 1, f.zero());
      e[k] = f.one();
      power_.push_back(std::move(e));
      idem_.push_back(lagrange(sys_.theta, k).padded(d + 1));
      idem_star_.push_back(lagrange(sys_.thetastar, k).padded(d + 1));
    }
    Polynomial<F> tau = Polynomial<F>::one(f);
    for (std::size_t t = 0; t <= d; ++t) {
      taustar_.push_back(tau.padded(d + 1));
      tau = tau * Polynomial<F>::linear(f, sys_.thetastar[t]);
    }
  }

  const TdSystem<F>& system() const { return sys_; }
  const F& field() const { return sys_.field; }
  std::size_t d() const { return sys_.d; }
  std::size_t dim() const { return TensorElement<F>::size(sys_.d); }

  /// Unit coordinate vector of A^k (or A*^k).
  const Vec<F>& power(std::size_t k) const { return power_.at(k); }
  /// E_i as a polynomial in A.
  const Vec<F>& idempotent(std::size_t i) const { return idem_.at(i); }
  /// E*_j as a polynomial in A*.
  const Vec<F>& idempotent_star(std::size_t j) const { return idem_star_.at(j); }
  /// tau*_t(A*) as a polynomial in A*.
  const Vec<F>& taustar(std::size_t t) const { return taustar_.at(t); }

  const Vec<F>& middle(Middle kind, std::size_t t) const {
    switch (kind) {
      case Middle::PowerT: return power(t);
      case Middle::TauStarT: return taustar(t);
      case Middle::EStar0: return idempotent_star(0);
    }
    throw std::invalid_argument("unknown middle kind");
  }

  Vec<F> pure(const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) const { return pure_tensor<F>(x, y, z).coeffs; }

  SubspaceBasis<F> empty_subspace() const { return SubspaceBasis<F>(field(), dim()); }

 private:
  Polynomial<F> lagrange(const Vec<F>& nodes, std::size_t i) const {
    const F& f = sys_.field;
    Polynomial<F> p = Polynomial<F>::one(f);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      p = (nodes[i] - nodes[j]).inverse() * (p * Polynomial<F>::linear(f, nodes[j]));
    }
    return p;
  }

  TdSystem<F> sys_;
  std::vector<Vec<F>> power_, idem_, idem_star_, taustar_;
};

/// Coordinates of E_i (x) m (x) E_j with m one of A*^t, tau*_t(A*), E*_0.
template <ExactField F>
TensorElement<F> idempotent_tensor_coords(const TensorSpace<F>& ts, std::size_t i, std::size_t t, std::size_t j,
                                          Middle middle) {
  if (i > ts.d() || t > ts.d() || j > ts.d()) throw std::invalid_argument("idempotent_tensor_coords: index out of range");
  return pure_tensor<F>(ts.idempotent(i), ts.middle(middle, t), ts.idempotent(j));
}

template <ExactField F>
TensorElement<F> idempotent_tensor_coords(const TdSystem<F>& sys, std::size_t i, std::size_t t, std::size_t j,
                                          Middle middle) {
  return idempotent_tensor_coords(TensorSpace<F>(sys), i, t, j, middle);
}

/// The map X (x) Y (x) Z -> E*_0 X Y Z E*_0, tabulated on the pure-power basis.
template <ExactField F>
class PiMap {
 public:
  explicit PiMap(const TdSystem<F>& sys) : field_(sys.field), n_(sys.n), d_(sys.d) {
    std::vector<Matrix<F>> pa, pas;
    Matrix<F> x = Matrix<F>::identity(field_, n_), y = x;
    for (std::size_t k = 0; k <= d_; ++k) {
      pa.push_back(x);
      pas.push_back(y);
      x = x * sys.A;
      y = y * sys.Astar;
    }
    const Matrix<F>& e0 = sys.Estar.front();
    for (std::size_t i = 0; i <= d_; ++i) {
      Matrix<F> left = e0 * pa[i];
      for (std::size_t t = 0; t <= d_; ++t) {
        Matrix<F> mid = left * pas[t];
        for (std::size_t j = 0; j <= d_; ++j) images_.push_back(mid * pa[j] * e0);
      }
    }
  }

  /// E*_0 A^i A*^t A^j E*_0.
  const Matrix<F>& image(std::size_t i, std::size_t t, std::size_t j) const {
    return images_[TensorElement<F>::index(d_, i, t, j)];
  }
  const std::vector<Matrix<F>>& images() const { return images_; }

  Matrix<F> operator()(const Vec<F>& coeffs) const {
    if (coeffs.size() != images_.size()) throw std::invalid_argument("pi: coordinate length mismatch");
    Matrix<F> out(field_, n_, n_);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) out += images_[k] * coeffs[k];
    }
    return out;
  }

 private:
  F field_;
  std::size_t n_, d_;
  std::vector<Matrix<F>> images_;
};

template <ExactField F>
Matrix<F> pi_eval(const TdSystem<F>& sys, const TensorElement<F>& v) {
  if (v.d != sys.d) throw std::invalid_argument("pi_eval: diameter mismatch");
  return PiMap<F>(sys)(v.coeffs);
}

}  // namespace tdlab
