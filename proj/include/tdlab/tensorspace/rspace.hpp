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
#include <string>
#include <vector>

#include "tdlab/report.hpp"
#include "tdlab/tensorspace/tensor.hpp"

namespace tdlab {

/// Spanning family of R_t inside D (x) tau*_t(A*) (x) D: low powers on the left,
/// low powers on the right, and E_i (x) tau*_t(A*) (x) E_j with |i - j| > t.
template <ExactField F>
std::vector<Vec<F>> rt_generators(const TensorSpace<F>& ts, std::size_t t) {
  const std::size_t d = ts.d();
  if (t > d) throw std::invalid_argument("R_t: t out of range");
  std::vector<Vec<F>> gens;
  const auto& mid = ts.taustar(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j <= d; ++j) gens.push_back(ts.pure(ts.power(i), mid, ts.power(j)));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j < t; ++j) gens.push_back(ts.pure(ts.power(i), mid, ts.power(j)));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      if ((i > j ? i - j : j - i) > t) gens.push_back(ts.pure(ts.idempotent(i), mid, ts.idempotent(j)));
    }
  return gens;
}

/// Spanning family of R taken straight from its definition:
/// A^i (x) E*_j (x) D and D (x) E*_j (x) A^i for i < j, plus E_i (x) A*^t (x) E_j for t < |i - j|.
template <ExactField F>
std::vector<Vec<F>> r_generators(const TensorSpace<F>& ts) {
  const std::size_t d = ts.d();
  std::vector<Vec<F>> gens;
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j)
      for (std::size_t k = 0; k <= d; ++k) {
        gens.push_back(ts.pure(ts.power(i), ts.idempotent_star(j), ts.power(k)));
        gens.push_back(ts.pure(ts.power(k), ts.idempotent_star(j), ts.power(i)));
      }
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      for (std::size_t t = 0; t < gap; ++t) gens.push_back(ts.pure(ts.idempotent(i), ts.power(t), ts.idempotent(j)));
    }
  return gens;
}

/// Pure-power basis of the slice D (x) tau*_t(A*) (x) D.
template <ExactField F>
std::vector<Vec<F>> slice_basis(const TensorSpace<F>& ts, std::size_t t) {
  std::vector<Vec<F>> out;
  for (std::size_t i = 0; i <= ts.d(); ++i)
    for (std::size_t j = 0; j <= ts.d(); ++j) out.push_back(ts.pure(ts.power(i), ts.taustar(t), ts.power(j)));
  return out;
}

template <ExactField F>
SubspaceBasis<F> build_Rt(const TensorSpace<F>& ts, std::size_t t) {
  return span_of(ts.field(), ts.dim(), rt_generators(ts, t));
}

template <ExactField F>
SubspaceBasis<F> build_Rt(const TdSystem<F>& sys, std::size_t t) {
  return build_Rt(TensorSpace<F>(sys), t);
}

template <ExactField F>
SubspaceBasis<F> build_R(const TensorSpace<F>& ts) {
  return span_of(ts.field(), ts.dim(), r_generators(ts));
}

template <ExactField F>
SubspaceBasis<F> build_R(const TdSystem<F>& sys) {
  return build_R(TensorSpace<F>(sys));
}

/// R and its slices, computed once and shared by the certifiers.
template <ExactField F>
struct RSpaces {
  SubspaceBasis<F> R;
  std::vector<SubspaceBasis<F>> Rt;

  explicit RSpaces(const TensorSpace<F>& ts) : R(build_R(ts)) {
    for (std::size_t t = 0; t <= ts.d(); ++t) Rt.push_back(build_Rt(ts, t));
  }
};

/// dim R_t = d^2+d+t, codim of R_t in its slice = d-t+1, dim R = d(d+1)(2d+3)/2,
/// codim R = (d+1)(d+2)/2.
template <ExactField F>
CheckResult check_dimensions(const TensorSpace<F>& ts, const RSpaces<F>& rs) {
  CheckResult r{"dimensions"};
  const std::size_t d = ts.d();
  std::vector<std::size_t> dims;
  for (std::size_t t = 0; t <= d; ++t) {
    const std::size_t got = rs.Rt[t].dim();
    dims.push_back(got);
    if (got != d * d + d + t) {
      r.fail("dim R_" + std::to_string(t) + " = " + std::to_string(got) + ", expected " + std::to_string(d * d + d + t));
    }
    if ((d + 1) * (d + 1) - got != d - t + 1) r.fail("codim R_" + std::to_string(t) + " wrong");
  }
  const std::size_t dim_r = rs.R.dim();
  const std::size_t codim_r = ts.dim() - dim_r;
  if (dim_r != d * (d + 1) * (2 * d + 3) / 2) r.fail("dim R = " + std::to_string(dim_r));
  if (codim_r != (d + 1) * (d + 2) / 2) r.fail("codim R = " + std::to_string(codim_r));
  r.details["d"] = d;
  r.details["dimRt"] = dims;
  r.details["dimR"] = dim_r;
  r.details["codimR"] = codim_r;
  return r;
}

/// R is the direct sum of the R_t: each R_t lies in R, the union of their bases is
/// independent, and the dimensions add up.
template <ExactField F>
CheckResult check_grading(const TensorSpace<F>& ts, const RSpaces<F>& rs) {
  CheckResult r{"grading"};
  SubspaceBasis<F> sum = ts.empty_subspace();
  std::size_t total = 0;
  for (std::size_t t = 0; t < rs.Rt.size(); ++t) {
    if (!rs.R.contains_all(rs.Rt[t])) r.fail("R_" + std::to_string(t) + " not contained in R");
    total += rs.Rt[t].dim();
    sum.insert_all(rs.Rt[t].rows());
  }
  if (sum.dim() != total) r.fail("sum of the R_t is not direct");
  if (!(sum == rs.R)) r.fail("sum of the R_t differs from R");
  r.details["sumDimRt"] = total;
  r.details["dimR"] = rs.R.dim();
  return r;
}

/// pi vanishes on every basis vector of R.
template <ExactField F>
CheckResult check_kernel(const RSpaces<F>& rs, const PiMap<F>& pi) {
  CheckResult r{"kernel_containment"};
  std::size_t k = 0;
  for (const auto& row : rs.R.rows()) {
    if (!pi(row).is_zero()) r.fail("pi(R basis vector " + std::to_string(k) + ") != 0");
    ++k;
  }
  r.details["vectors"] = k;
  return r;
}

template <ExactField F>
bool check_kernel(const TdSystem<F>& sys) {
  TensorSpace<F> ts(sys);
  return check_kernel(RSpaces<F>(ts), PiMap<F>(sys)).pass;
}

/// The transpose map fixes R and each R_t, and 1 - transpose sends every
/// pure-power basis vector into R (and each slice into its R_t).
template <ExactField F>
CheckResult check_dd_properties(const TensorSpace<F>& ts, const RSpaces<F>& rs) {
  CheckResult r{"transpose_map"};
  const std::size_t d = ts.d();
  for (const auto& row : rs.R.rows()) {
    if (transpose_dd<F>(transpose_dd<F>(row, d), d) != row) r.fail("transpose is not an involution");
    if (!rs.R.contains(transpose_dd<F>(row, d))) r.fail("R not invariant under transpose");
  }
  for (std::size_t t = 0; t <= d; ++t) {
    for (const auto& row : rs.Rt[t].rows()) {
      if (!rs.Rt[t].contains(transpose_dd<F>(row, d))) r.fail("R_" + std::to_string(t) + " not invariant under transpose");
    }
    for (const auto& b : slice_basis(ts, t)) {
      Vec<F> diff = b;
      auto tb = transpose_dd<F>(b, d);
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= tb[k];
      if (!rs.Rt[t].contains(diff)) r.fail("(1 - transpose) of slice " + std::to_string(t) + " vector not in R_t");
    }
  }
  std::size_t basis_vectors = 0;
  for (std::size_t k = 0; k < ts.dim(); ++k) {
    Vec<F> b(ts.dim(), ts.field().zero());
    b[k] = ts.field().one();
    auto tb = transpose_dd<F>(b, d);
    if (transpose_dd<F>(tb, d) != b) r.fail("transpose is not an involution on a basis vector");
    Vec<F> diff = b;
    for (std::size_t m = 0; m < diff.size(); ++m) diff[m] -= tb[m];
    if (!rs.R.contains(diff)) r.fail("(1 - transpose) of basis vector " + std::to_string(k) + " not in R");
    ++basis_vectors;
  }
  r.details["basisVectors"] = basis_vectors;
  return r;
}

}  // namespace tdlab
