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
#include <string>
#include <vector>

#include "tdlab/polybasis.hpp"
#include "tdlab/report.hpp"
#include "tdlab/tdcore/checks.hpp"
#include "tdlab/tdcore/d4.hpp"
#include "tdlab/tdcore/verify.hpp"
#include "tdlab/tensorspace/complements.hpp"
#include "tdlab/tensorspace/main_theorem.hpp"
#include "tdlab/tensorspace/rspace.hpp"

namespace tdlab {

inline CheckResult axiom_check(const AxiomVerdict& v) {
  CheckResult r{"axioms"};
  r.pass = v.accepted;
  r.details = v.to_json();
  return r;
}

/// Idempotent algebra, eigen decomposition, tridiagonality and shape, as stored in the system.
template <ExactField F>
CheckResult check_structure(const TdSystem<F>& sys) {
  CheckResult r{"system_structure"};
  for (auto& p : validate_system(sys)) r.fail(std::move(p));
  r.details["d"] = sys.d;
  r.details["rho"] = sys.rho;
  return r;
}

/// Exactly two standard orderings on each side when d >= 1, one the reverse of the other.
template <ExactField F>
CheckResult check_orderings(const TdSystem<F>& sys) {
  CheckResult r{"standard_orderings"};
  auto side = [&](const char* name, const Matrix<F>& m, const Matrix<F>& other, const Vec<F>& chosen) {
    auto so = detect_standard_orderings(m, other);
    if (!so.ok()) {
      r.fail(std::string(name) + ": " + so.failure);
      return;
    }
    const std::size_t want = sys.d == 0 ? 1 : 2;
    r.details[name] = so.orderings.size();
    if (so.orderings.size() != want) r.fail(std::string(name) + ": wrong number of standard orderings");
    if (so.orderings.size() == 2) {
      Vec<F> rev(so.orderings[1].rbegin(), so.orderings[1].rend());
      if (rev != so.orderings[0]) r.fail(std::string(name) + ": orderings are not mutual reversals");
    }
    bool found = false;
    for (const auto& o : so.orderings) found = found || o == chosen;
    if (!found) r.fail(std::string(name) + ": system ordering is not standard");
  };
  side("A", sys.A, sys.Astar, sys.theta);
  side("Astar", sys.Astar, sys.A, sys.thetastar);
  return r;
}

/// The defining relations of the D4 action: each generator is an involution,
/// the two reversals commute, and * conjugates one reversal into the other.
template <ExactField F>
CheckResult check_d4_relators(const TdSystem<F>& sys) {
  CheckResult r{"d4_relators"};
  const auto s = D4Element::star(), dn = D4Element::down(), dd = D4Element::double_down();
  auto act = [&](std::initializer_list<D4Element> word) {
    TdSystem<F> cur = sys;
    for (const auto& g : word) cur = d4_relative(cur, g);
    return cur;
  };
  if (!(act({s, s}) == sys)) r.fail("** != 1");
  if (!(act({dn, dn}) == sys)) r.fail("dd != 1");
  if (!(act({dd, dd}) == sys)) r.fail("DD != 1");
  if (!(act({dn, dd}) == act({dd, dn}))) r.fail("dD != Dd");
  if (!(act({s, dn, s}) == act({dd}))) r.fail("*d* != D");
  std::size_t accepted = 0;
  for (const auto& g : D4Element::all()) {
    auto rel = d4_relative(sys, g);
    auto problems = validate_system(rel);
    if (problems.empty()) {
      ++accepted;
    } else {
      r.fail("relative " + g.ascii_word() + ": " + problems.front());
    }
  }
  r.details["relatives"] = accepted;
  return r;
}

template <ExactField F>
CheckResult check_main_theorem(const TdSystem<F>& sys, const PiMap<F>& pi) {
  const auto cert = verify_theorem_main(sys, pi);
  CheckResult r{"main_theorem"};
  r.details = cert.to_json();
  if (!cert.equal) r.fail("span(E*_0 D D* D E*_0) != span(E*_0 D E*_0 D E*_0)");
  if (cert.commutator_max_rank != 0) r.fail("nonzero commutator");
  return r;
}

/// The probe reports instance data; a non-generated instance is not a failure.
template <ExactField F>
CheckResult check_conjecture_probe(const TdSystem<F>& sys) {
  CheckResult r{"conjecture_probe"};
  r.details = probe_conjecture(sys).to_json();
  return r;
}

enum class CheckLevel { Axioms, All };

/// Fixed check sequence for an accepted system. Axioms-level runs the structural
/// checks only; All adds the polynomial, tensor-space and main-theorem suites.
template <ExactField F>
void run_system_checks(const TdSystem<F>& sys, CheckLevel level, CertReport& report) {
  report.add(check_structure(sys));
  report.add(check_orderings(sys));
  report.add(check_supertrid(sys));
  if (level == CheckLevel::Axioms) return;
  report.add(check_d4_relators(sys));
  report.add(check_idempotent_expansion(sys));
  report.add(check_taubasis(sys));
  report.add(check_basis_replacement_all(sys));
  TensorSpace<F> ts(sys);
  RSpaces<F> rs(ts);
  PiMap<F> pi(sys);
  report.add(check_dimensions(ts, rs));
  report.add(check_grading(ts, rs));
  report.add(check_kernel(rs, pi));
  report.add(check_dd_properties(ts, rs));
  for (auto& c : check_complements(ts, rs)) report.add(std::move(c));
  report.add(check_triangular_change_all(ts, rs));
  report.add(check_estar0_reduction(ts, rs));
  report.add(check_main_theorem(sys, pi));
  report.add(check_conjecture_probe(sys));
}

/// Verifies a pair and, if accepted, certifies the system built on the default orderings.
template <ExactField F>
CertReport certify_pair(const std::string& label, const Matrix<F>& a, const Matrix<F>& astar, CheckLevel level) {
  CertReport report{label, {}};
  const auto verdict = verify_tridiagonal_pair(a, astar);
  report.add(axiom_check(verdict));
  if (verdict.accepted) run_system_checks(build_system(a, astar), level, report);
  return report;
}

}  // namespace tdlab
