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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdlab/exactla/linalg.hpp"
#include "tdlab/exactla/polynomial.hpp"
#include "tdlab/report.hpp"
#include "tdlab/tdcore/d4.hpp"
#include "tdlab/tdcore/system.hpp"

namespace tdlab {

/// tau_i = prod_{h<i} (x - theta_h), eta_i = prod_{h<i} (x - theta_{d-h}), and the
/// starred versions built from thetastar. Each entry i is monic of degree i.
template <ExactField F>
struct PolyFamily {
  std::vector<Polynomial<F>> tau;
  std::vector<Polynomial<F>> eta;
  std::vector<Polynomial<F>> taustar;
  std::vector<Polynomial<F>> etastar;
};

namespace detail {

template <ExactField F>
std::vector<Polynomial<F>> prefix_products(const F& field, const Vec<F>& roots) {
  std::vector<Polynomial<F>> out{Polynomial<F>::one(field)};
  for (std::size_t i = 1; i < roots.size(); ++i) out.push_back(out.back() * Polynomial<F>::linear(field, roots[i - 1]));
  return out;
}

}  // namespace detail

template <ExactField F>
PolyFamily<F> build_poly_family(const TdSystem<F>& sys) {
  const F& f = sys.field;
  Vec<F> rev(sys.theta.rbegin(), sys.theta.rend());
  Vec<F> rev_star(sys.thetastar.rbegin(), sys.thetastar.rend());
  return {detail::prefix_products(f, sys.theta), detail::prefix_products(f, rev),
          detail::prefix_products(f, sys.thetastar), detail::prefix_products(f, rev_star)};
}

/// Expansions of tau_i(A), eta_i(A) in the idempotents and back, plus the
/// factorization E_i = tau_i(A) eta_{d-i}(A) / (tau_i(theta_i) eta_{d-i}(theta_i)).
template <ExactField F>
CheckResult check_idempotent_expansion(const TdSystem<F>& sys) {
  CheckResult r{"idempotent_expansion"};
  const F& field = sys.field;
  const std::size_t d = sys.d, n = sys.n;
  const auto fam = build_poly_family(sys);
  const auto& th = sys.theta;
  std::vector<Matrix<F>> tau_a, eta_a;
  for (std::size_t i = 0; i <= d; ++i) {
    tau_a.push_back(eval_at_matrix(fam.tau[i], sys.A));
    eta_a.push_back(eval_at_matrix(fam.eta[i], sys.A));
  }
  std::size_t identities = 0;
  auto expect = [&](bool ok, const std::string& what, std::size_t i) {
    ++identities;
    if (!ok) r.fail(what + " at i=" + std::to_string(i));
  };
  for (std::size_t i = 0; i <= d; ++i) {
    const auto denom = fam.tau[i].eval(th[i]) * fam.eta[d - i].eval(th[i]);

    Matrix<F> lhs(field, n, n);
    for (std::size_t j = i; j <= d; ++j) lhs += sys.E[j] * fam.tau[i].eval(th[j]);
    expect(lhs == tau_a[i], "tau_i(A) = sum tau_i(theta_j) E_j", i);

    Matrix<F> ei(field, n, n);
    for (std::size_t j = i; j <= d; ++j) ei += tau_a[j] * fam.eta[d - j].eval(th[i]);
    expect(ei * denom.inverse() == sys.E[i], "E_i from tau_j(A)", i);

    Matrix<F> eta_sum(field, n, n);
    for (std::size_t j = 0; j + i <= d; ++j) eta_sum += sys.E[j] * fam.eta[i].eval(th[j]);
    expect(eta_sum == eta_a[i], "eta_i(A) = sum eta_i(theta_j) E_j", i);

    Matrix<F> ei2(field, n, n);
    for (std::size_t j = d - i; j <= d; ++j) ei2 += eta_a[j] * fam.tau[d - j].eval(th[i]);
    expect(ei2 * denom.inverse() == sys.E[i], "E_i from eta_j(A)", i);

    expect((tau_a[i] * eta_a[d - i]) * denom.inverse() == sys.E[i], "E_i = tau_i(A) eta_{d-i}(A) / scale", i);

    Polynomial<F> rhs(field);
    for (std::size_t j = i; j <= d; ++j) rhs = rhs + fam.eta[d - j].eval(th[i]) * fam.tau[j];
    expect(fam.tau[i] * fam.eta[d - i] == rhs, "tau_i eta_{d-i} = sum eta_{d-j}(theta_i) tau_j", i);
  }
  r.details["identities"] = identities;
  return r;
}

namespace detail {

template <ExactField F>
void taubasis_into(const TdSystem<F>& sys, const std::string& tag, CheckResult& r) {
  const F& field = sys.field;
  const std::size_t d = sys.d, n = sys.n;
  const auto tau = build_poly_family(sys).tau;
  std::vector<Vec<F>> powers, taus, idems;
  Matrix<F> pw = Matrix<F>::identity(field, n);
  for (std::size_t h = 0; h <= d; ++h) {
    powers.push_back(pw.flatten());
    pw = pw * sys.A;
    taus.push_back(eval_at_matrix(tau[h], sys.A).flatten());
    idems.push_back(sys.E[h].flatten());
  }
  auto span = [&](std::size_t lo, std::size_t hi, const std::vector<Vec<F>>& src) {
    return span_of(field, n * n, std::vector<Vec<F>>(src.begin() + static_cast<long>(lo), src.begin() + static_cast<long>(hi)));
  };
  for (std::size_t i = 0; i <= d; ++i) {
    const std::string at = " (" + tag + ", i=" + std::to_string(i) + ")";
    auto low_powers = span(0, i + 1, powers);
    auto low_taus = span(0, i + 1, taus);
    if (!(low_powers == low_taus)) r.fail("span{A^h : h<=i} != span{tau_h(A) : h<=i}" + at);
    auto high_idems = span(i, d + 1, idems);
    auto high_taus = span(i, d + 1, taus);
    if (!(high_idems == high_taus)) r.fail("span{E_h : h>=i} != span{tau_h(A) : h>=i}" + at);
    SubspaceBasis<F> sum = low_powers;
    sum.insert_all(high_idems.rows());
    const std::size_t meet = low_powers.dim() + high_idems.dim() - sum.dim();
    const bool nonzero = std::any_of(taus[i].begin(), taus[i].end(), [](const auto& x) { return !x.is_zero(); });
    if (meet != 1 || !nonzero || !low_powers.contains(taus[i]) || !high_idems.contains(taus[i])) {
      r.fail("tau_i(A) does not span the intersection" + at);
    }
  }
}

}  // namespace detail

/// Span comparisons between the power, tau and idempotent bases of D; the eta
/// statements are checked as the tau statements of the system with E reversed.
template <ExactField F>
CheckResult check_taubasis(const TdSystem<F>& sys) {
  CheckResult r{"tau_basis"};
  detail::taubasis_into(sys, "tau", r);
  detail::taubasis_into(d4_relative(sys, D4Element::double_down()), "eta", r);
  r.details["indices"] = sys.d + 1;
  return r;
}

/// {I, A, ..., A^count} together with {E_i : i not in replaced} is a basis of D.
/// Requires |replaced| = count + 1.
template <ExactField F>
bool check_basis_replacement(const TdSystem<F>& sys, const std::vector<std::size_t>& replaced, std::size_t count) {
  std::set<std::size_t> delta(replaced.begin(), replaced.end());
  if (delta.size() != replaced.size() || delta.size() != count + 1) {
    throw std::invalid_argument("basis replacement: need exactly count+1 distinct indices");
  }
  if (!delta.empty() && *delta.rbegin() > sys.d) throw std::invalid_argument("basis replacement: index out of range");
  std::vector<Matrix<F>> mats;
  Matrix<F> pw = Matrix<F>::identity(sys.field, sys.n);
  for (std::size_t k = 0; k <= count; ++k) {
    mats.push_back(pw);
    pw = pw * sys.A;
  }
  for (std::size_t i = 0; i <= sys.d; ++i) {
    if (!delta.count(i)) mats.push_back(sys.E[i]);
  }
  return span_rank(mats) == sys.d + 1;
}

/// Every nonempty subset of {0..d} as the replaced set.
template <ExactField F>
CheckResult check_basis_replacement_all(const TdSystem<F>& sys) {
  CheckResult r{"basis_replacement"};
  const std::size_t d = sys.d;
  if (d > 12) throw std::invalid_argument("basis replacement sweep limited to d <= 12");
  std::size_t subsets = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << (d + 1)); ++mask) {
    std::vector<std::size_t> delta;
    for (std::size_t i = 0; i <= d; ++i) {
      if (mask & (std::size_t{1} << i)) delta.push_back(i);
    }
    ++subsets;
    if (!check_basis_replacement(sys, delta, delta.size() - 1)) r.fail("subset mask " + std::to_string(mask));
  }
  r.details["subsets"] = subsets;
  return r;
}

}  // namespace tdlab
