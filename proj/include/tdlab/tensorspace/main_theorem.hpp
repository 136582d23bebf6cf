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
#include <vector>

#include "tdlab/report.hpp"
#include "tdlab/tensorspace/tensor.hpp"

namespace tdlab {

/// Certificate for the span equality span(E*_0 D D* D E*_0) = span(E*_0 D E*_0 D E*_0)
/// and the mutual commutativity of E*_0 D E*_0.
struct MainTheoremCert {
  std::size_t span_ddd = 0;
  std::size_t span_ded = 0;
  std::size_t commutator_max_rank = 0;
  std::size_t commutators = 0;
  bool equal = false;

  bool pass() const { return equal && commutator_max_rank == 0; }

  ordered_json to_json() const {
    return {{"spanDDD", span_ddd},
            {"spanDED", span_ded},
            {"equal", equal},
            {"commutators", commutators},
            {"commutatorMaxRank", commutator_max_rank}};
  }
};

template <ExactField F>
MainTheoremCert verify_theorem_main(const TdSystem<F>& sys, const PiMap<F>& pi) {
  const F& field = sys.field;
  const std::size_t n = sys.n, d = sys.d;
  SubspaceBasis<F> ddd(field, n * n);
  for (const auto& m : pi.images()) ddd.insert(m.flatten());

  const Matrix<F>& e0 = sys.Estar.front();
  std::vector<Matrix<F>> sandwiched;  // E*_0 A^i E*_0
  Matrix<F> power = Matrix<F>::identity(field, n);
  for (std::size_t i = 0; i <= d; ++i) {
    sandwiched.push_back(e0 * power * e0);
    power = power * sys.A;
  }
  SubspaceBasis<F> ded(field, n * n);
  MainTheoremCert cert;
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      Matrix<F> xy = sandwiched[i] * sandwiched[j];
      ded.insert(xy.flatten());
      Matrix<F> comm = xy - sandwiched[j] * sandwiched[i];
      cert.commutator_max_rank = std::max(cert.commutator_max_rank, rank(comm));
      ++cert.commutators;
    }
  }
  cert.span_ddd = ddd.dim();
  cert.span_ded = ded.dim();
  cert.equal = ddd == ded;
  return cert;
}

template <ExactField F>
MainTheoremCert verify_theorem_main(const TdSystem<F>& sys) {
  return verify_theorem_main(sys, PiMap<F>(sys));
}

}  // namespace tdlab
