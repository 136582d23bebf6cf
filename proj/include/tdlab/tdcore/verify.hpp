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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdlab/report.hpp"
#include "tdlab/tdcore/irreducible.hpp"
#include "tdlab/tdcore/system.hpp"

namespace tdlab {

enum class Axiom { Diagonalizable, TridiagA, TridiagAstar, Irreducible };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Diagonalizable: return "Diagonalizable";
    case Axiom::TridiagA: return "TridiagA";
    case Axiom::TridiagAstar: return "TridiagAstar";
    case Axiom::Irreducible: return "Irreducible";
  }
  return "?";
}

struct AxiomFailure {
  Axiom axiom;
  std::string witness;
};

/// Outcome of checking the four tridiagonal-pair axioms. accepted iff failures is empty.
struct AxiomVerdict {
  bool accepted = false;
  std::optional<std::size_t> diameter;
  std::vector<std::size_t> rho;
  std::vector<AxiomFailure> failures;

  ordered_json to_json() const {
    ordered_json j;
    j["accepted"] = accepted;
    j["diameter"] = diameter ? ordered_json(*diameter) : ordered_json(nullptr);
    j["rho"] = rho;
    j["failures"] = ordered_json::array();
    for (const auto& f : failures) j["failures"].push_back({{"axiom", to_string(f.axiom)}, {"witness", f.witness}});
    return j;
  }
};

namespace detail {

template <ExactField F>
struct PairAnalysis {
  AxiomVerdict verdict;
  StandardOrderings<F> orderings_a;
  StandardOrderings<F> orderings_astar;
};

template <ExactField F>
std::string describe_subspace(const std::vector<Vec<F>>& basis) {
  std::string s = "span{";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    s += k ? ", (" : "(";
    for (std::size_t j = 0; j < basis[k].size(); ++j) s += (j ? "," : "") + basis[k][j].to_string();
    s += ")";
  }
  return s + "}";
}

template <ExactField F>
PairAnalysis<F> analyze_pair(const Matrix<F>& a, const Matrix<F>& astar) {
  if (!a.is_square() || !astar.is_square() || a.rows() != astar.rows()) {
    throw std::invalid_argument("tridiagonal pair: matrices must be square of equal size");
  }
  if (!(a.field() == astar.field())) throw std::invalid_argument("tridiagonal pair: field mismatch");
  if (a.rows() == 0) throw std::invalid_argument("tridiagonal pair: dimension must be positive");

  PairAnalysis<F> out;
  auto& v = out.verdict;
  auto eig_a = eigen_data(a);
  auto eig_as = eigen_data(astar);
  if (!eig_a.ok()) v.failures.push_back({Axiom::Diagonalizable, std::string("A: ") + to_string(eig_a.status)});
  if (!eig_as.ok()) v.failures.push_back({Axiom::Diagonalizable, std::string("A*: ") + to_string(eig_as.status)});
  if (eig_a.ok() && eig_as.ok()) {
    out.orderings_a = detect_standard_orderings(a, astar);
    out.orderings_astar = detect_standard_orderings(astar, a);
    if (!out.orderings_a.ok()) v.failures.push_back({Axiom::TridiagA, out.orderings_a.failure});
    if (!out.orderings_astar.ok()) v.failures.push_back({Axiom::TridiagAstar, out.orderings_astar.failure});
    if (eig_a.eigenvalues.size() != eig_as.eigenvalues.size()) {
      v.failures.push_back({Axiom::TridiagAstar, "diameter mismatch: A has " + std::to_string(eig_a.eigenvalues.size()) +
                                                     " eigenspaces, A* has " +
                                                     std::to_string(eig_as.eigenvalues.size())});
    }
  }
  auto irr = check_irreducible(a, astar);
  if (irr.verdict == Irreducibility::Reducible) {
    v.failures.push_back({Axiom::Irreducible, "invariant subspace " + describe_subspace<F>(irr.witness)});
  } else if (irr.verdict == Irreducibility::Undetermined) {
    v.failures.push_back({Axiom::Irreducible, "undetermined"});
  }
  v.accepted = v.failures.empty();
  if (v.accepted) {
    v.diameter = eig_a.eigenvalues.size() - 1;
    auto estar = primitive_idempotents(out.orderings_astar.orderings.front(), astar);
    for (const auto& e : estar) v.rho.push_back(rank(e));
  }
  return out;
}

}  // namespace detail

/// Checks diagonalizability, both tridiagonal actions, and irreducibility.
template <ExactField F>
AxiomVerdict verify_tridiagonal_pair(const Matrix<F>& a, const Matrix<F>& astar) {
  return detail::analyze_pair(a, astar).verdict;
}

/// Assembles the system for the chosen standard orderings (index 0 or 1; only 0 when d = 0).
template <ExactField F>
TdSystem<F> build_system(const Matrix<F>& a, const Matrix<F>& astar, std::size_t choice_a = 0,
                         std::size_t choice_astar = 0) {
  auto analysis = detail::analyze_pair(a, astar);
  if (!analysis.verdict.accepted) {
    std::string why = analysis.verdict.failures.empty() ? "" : analysis.verdict.failures.front().witness;
    throw std::invalid_argument("build_system: not a tridiagonal pair (" + why + ")");
  }
  const auto& oa = analysis.orderings_a.orderings;
  const auto& oas = analysis.orderings_astar.orderings;
  if (choice_a >= oa.size() || choice_astar >= oas.size()) {
    throw std::invalid_argument("build_system: ordering index out of range");
  }
  TdSystem<F> sys{a.field(), a.rows(), *analysis.verdict.diameter, a, astar, oa[choice_a], oas[choice_astar], {}, {}, {}};
  sys.E = primitive_idempotents(sys.theta, a);
  sys.Estar = primitive_idempotents(sys.thetastar, astar);
  for (const auto& e : sys.Estar) sys.rho.push_back(rank(e));
  return sys;
}

}  // namespace tdlab
