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
#include "tdlab/tdcore/irreducible.hpp"
#include "tdlab/tdcore/system.hpp"

namespace tdlab {

/// E*_i A^k E*_j = 0 and E_i A*^k E_j = 0 whenever k < |i - j|.
template <ExactField F>
CheckResult check_supertrid(const TdSystem<F>& sys) {
  CheckResult r{"supertridiagonal"};
  const std::size_t d = sys.d;
  std::size_t checked = 0;
  std::vector<Matrix<F>> pow_a{Matrix<F>::identity(sys.field, sys.n)}, pow_as{pow_a.front()};
  for (std::size_t k = 1; k < d; ++k) {
    pow_a.push_back(pow_a.back() * sys.A);
    pow_as.push_back(pow_as.back() * sys.Astar);
  }
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      for (std::size_t k = 0; k < gap; ++k) {
        ++checked;
        if (!(sys.Estar[i] * pow_a[k] * sys.Estar[j]).is_zero()) {
          r.fail("E*_" + std::to_string(i) + " A^" + std::to_string(k) + " E*_" + std::to_string(j));
        }
        if (!(sys.E[i] * pow_as[k] * sys.E[j]).is_zero()) {
          r.fail("E_" + std::to_string(i) + " A*^" + std::to_string(k) + " E_" + std::to_string(j));
        }
      }
    }
  }
  r.details["triples"] = checked;
  return r;
}

struct ConjectureProbe {
  bool generated = false;
  std::size_t dim_e0te0 = 0;       // dim E*_0 T E*_0
  std::size_t dim_subalgebra = 0;  // dim of the algebra generated by E*_0 D E*_0
  std::size_t dim_t = 0;           // dim T

  ordered_json to_json() const {
    return {{"generated", generated}, {"dimE0TE0", dim_e0te0}, {"dimSubalgebra", dim_subalgebra}, {"dimT", dim_t}};
  }
};

/// Instance probe: does E*_0 D E*_0 generate E*_0 T E*_0, with T the algebra generated by A and A*?
template <ExactField F>
ConjectureProbe probe_conjecture(const TdSystem<F>& sys) {
  const F& field = sys.field;
  const std::size_t n = sys.n;
  const Matrix<F>& e0 = sys.Estar.front();
  auto t = word_algebra(field, n, {sys.A, sys.Astar});

  SubspaceBasis<F> sandwich(field, n * n);
  for (const auto& x : t.elements) sandwich.insert((e0 * x * e0).flatten());

  SubspaceBasis<F> sub(field, n * n);
  std::vector<Matrix<F>> elems;
  Matrix<F> power = Matrix<F>::identity(field, n);
  for (std::size_t i = 0; i <= sys.d; ++i) {
    Matrix<F> m = e0 * power * e0;
    if (sub.insert(m.flatten())) elems.push_back(std::move(m));
    power = power * sys.A;
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = elems.size();
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        Matrix<F> prod = elems[a] * elems[b];
        if (sub.insert(prod.flatten())) {
          elems.push_back(std::move(prod));
          grew = true;
        }
      }
    }
  }
  ConjectureProbe out;
  out.dim_t = t.dim();
  out.dim_e0te0 = sandwich.dim();
  out.dim_subalgebra = sub.dim();
  out.generated = sandwich.contains_all(sub) && out.dim_e0te0 == out.dim_subalgebra;
  return out;
}

}  // namespace tdlab
