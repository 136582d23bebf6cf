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
#include <stdexcept>
#include <string>
#include <vector>

#include "tdlab/exactla/eigen.hpp"
#include "tdlab/exactla/linalg.hpp"

namespace tdlab {

/// A tridiagonal system: the pair together with standard orderings of both
/// idempotent families and the matching eigenvalue sequences.
template <ExactField F>
struct TdSystem {
  F field;
  std::size_t n = 0;  // dim V
  std::size_t d = 0;  // diameter
  Matrix<F> A;
  Matrix<F> Astar;
  Vec<F> theta;
  Vec<F> thetastar;
  std::vector<Matrix<F>> E;
  std::vector<Matrix<F>> Estar;
  std::vector<std::size_t> rho;  // rho[i] = dim Estar[i] V

  friend bool operator==(const TdSystem&, const TdSystem&) = default;
};

/// E_i = prod_{j != i} (M - theta_j I) / (theta_i - theta_j).
template <ExactField F>
std::vector<Matrix<F>> primitive_idempotents(const Vec<F>& eigenvalues, const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("primitive_idempotents: matrix not square");
  const F& field = m.field();
  const std::size_t n = m.rows();
  const Matrix<F> id = Matrix<F>::identity(field, n);
  std::vector<Matrix<F>> out;
  out.reserve(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    Matrix<F> e = id;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (j == i) continue;
      auto gap = eigenvalues[i] - eigenvalues[j];
      if (gap.is_zero()) throw std::invalid_argument("primitive_idempotents: repeated eigenvalue");
      e = e * ((m - id * eigenvalues[j]) * gap.inverse());
    }
    out.push_back(std::move(e));
  }
  return out;
}

/// Every standard ordering of M's eigenvalues relative to N, or why none exists.
template <ExactField F>
struct StandardOrderings {
  std::vector<Vec<F>> orderings;
  std::string failure;  // set when no standard ordering exists

  bool ok() const { return failure.empty(); }
};

/// Standard orderings are the Hamiltonian paths of the graph joining eigenspaces
/// i != j whenever F_j N F_i or F_i N F_j is nonzero; that graph must itself be a path.
/// Orderings come back with the one starting at the larger eigenvalue first.
template <ExactField F>
StandardOrderings<F> detect_standard_orderings(const Matrix<F>& m, const Matrix<F>& nmat) {
  auto eig = eigen_data(m);
  if (!eig.ok()) {
    throw std::invalid_argument(std::string("detect_standard_orderings: ") + to_string(eig.status));
  }
  const std::size_t k = eig.eigenvalues.size();
  StandardOrderings<F> out;
  if (k == 1) {
    out.orderings.push_back(eig.eigenvalues);
    return out;
  }
  auto idem = primitive_idempotents(eig.eigenvalues, m);
  std::vector<std::vector<std::size_t>> adj(k);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool linked = !(idem[j] * nmat * idem[i]).is_zero() || !(idem[i] * nmat * idem[j]).is_zero();
      if (linked) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (adj[i].size() > 2) {
      out.failure = "eigenvalue " + eig.eigenvalues[i].to_string() + " is linked to " +
                    std::to_string(adj[i].size()) + " other eigenspaces";
      return out;
    }
  }
  if (edges != k - 1) {
    out.failure = "eigenspace graph has " + std::to_string(edges) + " edges on " + std::to_string(k) +
                  " vertices (cycle or disconnected)";
    return out;
  }
  // max degree 2 with k-1 edges: a path iff connected
  std::size_t start = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (adj[i].size() == 1) {
      start = i;
      break;
    }
  }
  if (start == k) {
    out.failure = "eigenspace graph has no endpoint";
    return out;
  }
  std::vector<std::size_t> path{start};
  std::size_t prev = k, cur = start;
  while (true) {
    std::size_t next = k;
    for (auto nb : adj[cur]) {
      if (nb != prev) next = nb;
    }
    if (next == k) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (path.size() != k) {
    out.failure = "eigenspace graph is disconnected";
    return out;
  }
  Vec<F> forward, backward;
  for (auto idx : path) forward.push_back(eig.eigenvalues[idx]);
  backward.assign(forward.rbegin(), forward.rend());
  if (forward.front() < backward.front()) std::swap(forward, backward);
  out.orderings.push_back(std::move(forward));
  out.orderings.push_back(std::move(backward));
  return out;
}

/// Lists every violated system invariant; empty means the data is a consistent system.
/// Irreducibility is not re-examined here.
template <ExactField F>
std::vector<std::string> validate_system(const TdSystem<F>& sys) {
  std::vector<std::string> problems;
  const F& field = sys.field;
  const std::size_t n = sys.n, d = sys.d;
  if (sys.theta.size() != d + 1 || sys.thetastar.size() != d + 1 || sys.E.size() != d + 1 ||
      sys.Estar.size() != d + 1 || sys.rho.size() != d + 1) {
    problems.push_back("family sizes disagree with diameter " + std::to_string(d));
    return problems;
  }
  const Matrix<F> id = Matrix<F>::identity(field, n);
  auto family = [&](const char* name, const Matrix<F>& op, const Vec<F>& th, const std::vector<Matrix<F>>& idem) {
    Matrix<F> sum(field, n, n), recon(field, n, n);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) {
        if (th[i] == th[j]) problems.push_back(std::string(name) + ": eigenvalues not distinct");
      }
      sum += idem[i];
      recon += idem[i] * th[i];
      for (std::size_t j = 0; j <= d; ++j) {
        Matrix<F> prod = idem[i] * idem[j];
        bool good = i == j ? prod == idem[i] : prod.is_zero();
        if (!good) {
          problems.push_back(std::string(name) + ": idempotent product " + std::to_string(i) + "," +
                             std::to_string(j) + " wrong");
        }
      }
    }
    if (!(sum == id)) problems.push_back(std::string(name) + ": idempotents do not sum to I");
    if (!(recon == op)) problems.push_back(std::string(name) + ": operator != sum theta_i E_i");
  };
  family("A", sys.A, sys.theta, sys.E);
  family("A*", sys.Astar, sys.thetastar, sys.Estar);
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      if ((i > j ? i - j : j - i) <= 1) continue;
      if (!(sys.E[j] * sys.Astar * sys.E[i]).is_zero()) {
        problems.push_back("E_" + std::to_string(j) + " A* E_" + std::to_string(i) + " != 0");
      }
      if (!(sys.Estar[j] * sys.A * sys.Estar[i]).is_zero()) {
        problems.push_back("E*_" + std::to_string(j) + " A E*_" + std::to_string(i) + " != 0");
      }
    }
  }
  for (std::size_t i = 0; i <= d; ++i) {
    if (rank(sys.Estar[i]) != sys.rho[i]) problems.push_back("shape entry " + std::to_string(i) + " wrong");
  }
  return problems;
}

}  // namespace tdlab
