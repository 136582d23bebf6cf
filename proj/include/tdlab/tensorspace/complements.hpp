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

#include "tdlab/report.hpp"
#include "tdlab/tensorspace/rspace.hpp"

namespace tdlab {

namespace detail {

inline std::string at_t(std::size_t t) { return " (t=" + std::to_string(t) + ")"; }

// Rank of `base + span(extra)`, and whether it equals dim(base) + rank(extra).
struct UnionRank {
  std::size_t family_rank = 0;
  std::size_t union_dim = 0;
  bool direct = false;
};

template <ExactField F>
UnionRank union_rank(const TensorSpace<F>& ts, const SubspaceBasis<F>& base, const std::vector<Vec<F>>& extra) {
  UnionRank u;
  u.family_rank = span_of(ts.field(), ts.dim(), extra).dim();
  SubspaceBasis<F> s = base;
  s.insert_all(extra);
  u.union_dim = s.dim();
  u.direct = u.union_dim == base.dim() + u.family_rank;
  return u;
}

}  // namespace detail

/// Basis and complement certificates, one CheckResult each:
///  slice_basis          four families per slice, the first three spanning R_t, jointly a basis of the slice;
///  complement_Rt        E_i (x) tau*_t (x) E_{i+t} complete R_t to the slice;
///  complement_R_tau     E_i (x) tau*_{j-i} (x) E_j (i <= j) complete R directly;
///  complement_R_estar0  E_i (x) E*_0 (x) E_j (i <= j) complete R directly.
template <ExactField F>
std::vector<CheckResult> check_complements(const TensorSpace<F>& ts, const RSpaces<F>& rs) {
  const std::size_t d = ts.d();
  const std::size_t slice_dim = (d + 1) * (d + 1);
  CheckResult basis{"slice_basis"}, comp_t{"complement_Rt"}, comp_tau{"complement_R_tau"},
      comp_e0{"complement_R_estar0"};
  ordered_json cards = ordered_json::array();

  for (std::size_t t = 0; t <= d; ++t) {
    const auto& mid = ts.taustar(t);
    std::vector<Vec<F>> low_right, low_left, far, diag;
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j < t; ++j) low_right.push_back(ts.pure(ts.power(i), mid, ts.power(j)));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = t; j <= d; ++j) low_left.push_back(ts.pure(ts.power(i), mid, ts.power(j)));
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j) {
        if ((i > j ? i - j : j - i) > t) far.push_back(ts.pure(ts.idempotent(i), mid, ts.idempotent(j)));
      }
    for (std::size_t i = 0; i + t <= d; ++i) diag.push_back(ts.pure(ts.idempotent(i), mid, ts.idempotent(i)));

    const std::vector<std::size_t> sizes{low_right.size(), low_left.size(), far.size(), diag.size()};
    const std::vector<std::size_t> expected{t * (d + 1), t * (d - t + 1), (d - t) * (d - t + 1), d - t + 1};
    cards.push_back(sizes);
    if (sizes != expected) basis.fail("family cardinalities" + detail::at_t(t));

    SubspaceBasis<F> r_part = ts.empty_subspace();
    std::size_t r_count = 0;
    for (const auto* fam : {&low_right, &low_left, &far}) {
      r_part.insert_all(*fam);
      r_count += fam->size();
    }
    if (r_part.dim() != r_count) basis.fail("first three families dependent" + detail::at_t(t));
    if (!(r_part == rs.Rt[t])) basis.fail("first three families do not span R_t" + detail::at_t(t));
    SubspaceBasis<F> whole = r_part;
    whole.insert_all(diag);
    if (whole.dim() != slice_dim) basis.fail("joint rank " + std::to_string(whole.dim()) + detail::at_t(t));

    std::vector<Vec<F>> shifted;
    for (std::size_t i = 0; i + t <= d; ++i) shifted.push_back(ts.pure(ts.idempotent(i), mid, ts.idempotent(i + t)));
    auto u = detail::union_rank(ts, rs.Rt[t], shifted);
    if (u.union_dim != slice_dim || !u.direct || u.family_rank != d - t + 1) {
      comp_t.fail("R_t + shifted diagonal has dim " + std::to_string(u.union_dim) + detail::at_t(t));
    }
  }
  basis.details["cardinalities"] = cards;

  std::vector<Vec<F>> tau_family, e0_family;
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j) {
      tau_family.push_back(ts.pure(ts.idempotent(i), ts.taustar(j - i), ts.idempotent(j)));
      e0_family.push_back(ts.pure(ts.idempotent(i), ts.idempotent_star(0), ts.idempotent(j)));
    }
  const std::size_t codim = (d + 1) * (d + 2) / 2;
  for (auto* item : {&comp_tau, &comp_e0}) {
    const auto& fam = item == &comp_tau ? tau_family : e0_family;
    auto u = detail::union_rank(ts, rs.R, fam);
    item->details["familySize"] = fam.size();
    item->details["familyRank"] = u.family_rank;
    item->details["unionDim"] = u.union_dim;
    if (fam.size() != codim) item->fail("family size " + std::to_string(fam.size()));
    if (u.family_rank != fam.size()) item->fail("family is dependent");
    if (u.union_dim != ts.dim()) item->fail("R + family has dim " + std::to_string(u.union_dim));
    if (!u.direct) item->fail("sum with R is not direct");
  }
  comp_t.details["slices"] = d + 1;
  return {basis, comp_t, comp_tau, comp_e0};
}

/// For fixed t: the two combinations of E_i (x) tau*_t (x) E_i with E_i (x) tau*_t (x) E_j
/// (resp. E_j (x) tau*_t (x) E_i), weighted by f(theta_i), f(theta_j) with
/// f = prod_{h=i+1..i+t, h != j} (x - theta_h), lie in R_t + span{E_h (x) tau*_t (x) E_h : h < i};
/// and modulo R_t the shifted vectors E_i (x) tau*_t (x) E_{i+t} are an upper
/// triangular combination of the diagonal ones with nonzero diagonal.
template <ExactField F>
CheckResult check_triangular_change(const TensorSpace<F>& ts, const RSpaces<F>& rs, std::size_t t) {
  CheckResult r{"triangular_change"};
  const std::size_t d = ts.d();
  if (t > d) throw std::invalid_argument("check_triangular_change: t out of range");
  const F& field = ts.field();
  const auto& th = ts.system().theta;
  const auto& mid = ts.taustar(t);
  auto tens = [&](std::size_t a, std::size_t b) { return ts.pure(ts.idempotent(a), mid, ts.idempotent(b)); };
  auto combo = [](Vec<F> x, const typename F::scalar& cx, const Vec<F>& y, const typename F::scalar& cy) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = cx * x[k] + cy * y[k];
    return x;
  };

  SubspaceBasis<F> space = rs.Rt[t];
  std::size_t pairs = 0;
  for (std::size_t i = 0; i + t <= d; ++i) {
    for (std::size_t j = i + 1; j <= i + t; ++j) {
      Vec<F> roots;
      for (std::size_t h = i + 1; h <= i + t; ++h) {
        if (h != j) roots.push_back(th[h]);
      }
      auto f = Polynomial<F>::from_roots(field, roots);
      const auto fi = f.eval(th[i]), fj = f.eval(th[j]);
      const std::string at = " (t=" + std::to_string(t) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
      if (fi.is_zero() || fj.is_zero()) r.fail("vanishing weight" + at);
      if (!space.contains(combo(tens(i, i), fi, tens(i, j), fj))) r.fail("right combination not in space" + at);
      if (!space.contains(combo(tens(i, i), fi, tens(j, i), fj))) r.fail("left combination not in space" + at);
      ++pairs;
    }
    space.insert(tens(i, i));
  }

  std::vector<Vec<F>> diag_mod;
  for (std::size_t k = 0; k + t <= d; ++k) diag_mod.push_back(rs.Rt[t].reduce(tens(k, k)));
  if (span_of(field, ts.dim(), diag_mod).dim() != diag_mod.size()) r.fail("diagonal vectors dependent modulo R_t" + detail::at_t(t));
  ordered_json matrix = ordered_json::array();
  for (std::size_t i = 0; i + t <= d; ++i) {
    auto coeffs = solve_combination(field, diag_mod, rs.Rt[t].reduce(tens(i, i + t)));
    if (!coeffs) {
      r.fail("shifted vector outside R_t + diagonal span (t=" + std::to_string(t) + ", i=" + std::to_string(i) + ")");
      continue;
    }
    std::vector<std::string> column;
    for (std::size_t k = 0; k < coeffs->size(); ++k) {
      column.push_back((*coeffs)[k].to_string());
      if (k > i && !(*coeffs)[k].is_zero()) r.fail("not upper triangular" + detail::at_t(t));
    }
    if ((*coeffs)[i].is_zero()) r.fail("zero diagonal entry" + detail::at_t(t));
    matrix.push_back(column);
  }
  r.details["t"] = t;
  r.details["pairs"] = pairs;
  r.details["changeOfBasisColumns"] = matrix;
  return r;
}

/// Runs the triangularity certificate for every t; details hold one entry per t.
template <ExactField F>
CheckResult check_triangular_change_all(const TensorSpace<F>& ts, const RSpaces<F>& rs) {
  CheckResult r{"triangular_change"};
  r.details["perT"] = ordered_json::array();
  for (std::size_t t = 0; t <= ts.d(); ++t) {
    auto one = check_triangular_change(ts, rs, t);
    if (!one.pass) {
      for (const auto& f : one.details["failures"]) r.fail(f.template get<std::string>());
    }
    r.details["perT"].push_back({{"t", t}, {"pairs", one.details["pairs"]}, {"pass", one.pass}});
  }
  return r;
}

/// E_i (x) tau*_t(A*) (x) E_{i+t} - c_t E_i (x) E*_0 (x) E_{i+t} lies in
/// R + sum_{m > t} D (x) tau*_m(A*) (x) D, where c_t = prod_{k=1..t} (theta*_0 - theta*_k).
template <ExactField F>
CheckResult check_estar0_reduction(const TensorSpace<F>& ts, const RSpaces<F>& rs) {
  CheckResult r{"estar0_reduction"};
  const std::size_t d = ts.d();
  const F& field = ts.field();
  const auto& ths = ts.system().thetastar;
  SubspaceBasis<F> space = rs.R;
  ordered_json scales = ordered_json::array();
  std::size_t checked = 0;
  for (std::size_t t = d + 1; t-- > 0;) {
    auto c = field.one();
    for (std::size_t k = 1; k <= t; ++k) c *= ths[0] - ths[k];
    scales.push_back({{"t", t}, {"c", c.to_string()}});
    for (std::size_t i = 0; i + t <= d; ++i) {
      Vec<F> v = ts.pure(ts.idempotent(i), ts.taustar(t), ts.idempotent(i + t));
      Vec<F> w = ts.pure(ts.idempotent(i), ts.idempotent_star(0), ts.idempotent(i + t));
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * w[k];
      ++checked;
      if (!space.contains(v)) r.fail("difference not in R + higher slices (t=" + std::to_string(t) + ", i=" + std::to_string(i) + ")");
    }
    space.insert_all(slice_basis(ts, t));
  }
  r.details["checked"] = checked;
  r.details["scales"] = scales;
  return r;
}

}  // namespace tdlab
