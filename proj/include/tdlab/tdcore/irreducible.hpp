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
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdlab/exactla/eigen.hpp"
#include "tdlab/exactla/linalg.hpp"

namespace tdlab {

/// Linearly independent matrices spanning the unital algebra generated by gens.
template <ExactField F>
struct AlgebraSpan {
  SubspaceBasis<F> span;
  std::vector<Matrix<F>> elements;

  std::size_t dim() const { return span.dim(); }
};

/// Closure of {I} under right multiplication by the generators. Every word in the
/// generators is reached, and the loop stops once a generation adds nothing (at most n^2).
template <ExactField F>
AlgebraSpan<F> word_algebra(const F& field, std::size_t n, const std::vector<Matrix<F>>& gens) {
  AlgebraSpan<F> out{SubspaceBasis<F>(field, n * n), {}};
  std::deque<Matrix<F>> frontier;
  auto offer = [&](Matrix<F> m) {
    if (out.span.insert(m.flatten())) {
      out.elements.push_back(m);
      frontier.push_back(std::move(m));
    }
  };
  offer(Matrix<F>::identity(field, n));
  while (!frontier.empty() && out.span.dim() < n * n) {
    Matrix<F> cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) offer(cur * g);
  }
  return out;
}

/// Smallest subspace containing v and invariant under every generator.
template <ExactField F>
SubspaceBasis<F> vector_closure(const F& field, const Vec<F>& v, const std::vector<Matrix<F>>& gens) {
  SubspaceBasis<F> span(field, v.size());
  std::deque<Vec<F>> frontier;
  if (span.insert(v)) frontier.push_back(v);
  while (!frontier.empty() && span.dim() < v.size()) {
    Vec<F> cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Vec<F> img = g.apply(cur);
      if (span.insert(img)) frontier.push_back(std::move(img));
    }
  }
  return span;
}

enum class Irreducibility { Irreducible, Reducible, Undetermined };

inline const char* to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Undetermined: return "undetermined";
  }
  return "?";
}

template <ExactField F>
struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Undetermined;
  std::vector<Vec<F>> witness;  // basis of a proper nonzero common invariant subspace
  std::size_t algebra_dim = 0;
  std::string method;
};

/// Decides whether A and Astar share a proper nonzero invariant subspace.
///
/// Full generated algebra proves irreducibility. Otherwise the closure of each
/// eigenvector and standard basis vector is examined (and the same for the
/// transposed pair, whose proper closures have invariant annihilators). When every
/// eigenspace of A or of Astar is a line and all those closures are full, the pair
/// is irreducible, since an invariant subspace of a diagonalizable map contains an
/// eigenvector. Anything left is Undetermined.
template <ExactField F>
IrreducibilityResult<F> check_irreducible(const Matrix<F>& a, const Matrix<F>& astar) {
  if (!a.is_square() || !astar.is_square() || a.rows() != astar.rows() || !(a.field() == astar.field())) {
    throw std::invalid_argument("check_irreducible: shape or field mismatch");
  }
  const F& field = a.field();
  const std::size_t n = a.rows();
  IrreducibilityResult<F> out;
  out.algebra_dim = word_algebra(field, n, {a, astar}).dim();
  if (out.algebra_dim == n * n) {
    out.verdict = Irreducibility::Irreducible;
    out.method = "generated algebra is all of End(V)";
    return out;
  }

  auto candidates = [&](const EigenData<F>& ex, const EigenData<F>& ey) {
    std::vector<Vec<F>> vs;
    for (const auto* e : {&ex, &ey})
      for (const auto& space : e->eigenspaces)
        for (const auto& v : space) vs.push_back(v);
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> e(n, field.zero());
      e[k] = field.one();
      vs.push_back(std::move(e));
    }
    return vs;
  };

  auto eig_a = eigen_data(a);
  auto eig_as = eigen_data(astar);
  for (const auto& v : candidates(eig_a, eig_as)) {
    auto closure = vector_closure(field, v, {a, astar});
    if (closure.dim() < n) {
      out.verdict = Irreducibility::Reducible;
      out.witness = closure.rows();
      out.method = "proper closure of a vector";
      return out;
    }
  }

  const Matrix<F> at = a.transpose(), ast = astar.transpose();
  auto eig_at = eigen_data(at);
  auto eig_ast = eigen_data(ast);
  for (const auto& v : candidates(eig_at, eig_ast)) {
    auto closure = vector_closure(field, v, {at, ast});
    if (closure.dim() < n) {
      out.verdict = Irreducibility::Reducible;
      out.witness = nullspace(Matrix<F>::from_rows(field, closure.rows(), n));
      out.method = "annihilator of a proper closure under the transposed pair";
      return out;
    }
  }

  auto all_lines = [](const EigenData<F>& e) {
    if (!e.ok()) return false;
    for (const auto& space : e.eigenspaces) {
      if (space.size() != 1) return false;
    }
    return true;
  };
  if (all_lines(eig_a) || all_lines(eig_as)) {
    out.verdict = Irreducibility::Irreducible;
    out.method = "every eigenvector closure of a multiplicity-free operator is full";
    return out;
  }
  out.verdict = Irreducibility::Undetermined;
  out.method = "no invariant subspace found; eigenspaces of dimension > 1 on both sides";
  return out;
}

}  // namespace tdlab
