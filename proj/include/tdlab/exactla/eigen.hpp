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
#include <type_traits>
#include <utility>
#include <vector>

#include "tdlab/exactla/linalg.hpp"
#include "tdlab/exactla/polynomial.hpp"

namespace tdlab {

namespace detail {

// det(lambda I - M) by row-by-row Laplace expansion memoized over used-column masks.
template <ExactField F>
Polynomial<F> char_poly_by_minors(const Matrix<F>& m) {
  const F& field = m.field();
  const std::size_t n = m.rows();
  if (n > 24) throw std::invalid_argument("char_poly: expansion by minors limited to n <= 24");
  auto entry = [&](std::size_t r, std::size_t c) {
    Polynomial<F> e = Polynomial<F>::constant(field, -m(r, c));
    if (r == c) e = e + Polynomial<F>(field, Vec<F>{field.zero(), field.one()});
    return e;
  };
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Polynomial<F>> dp(full + 1, Polynomial<F>(field));
  dp[0] = Polynomial<F>::one(field);
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::size_t free_before = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      Polynomial<F> term = entry(row, c) * dp[mask];
      if (free_before % 2 == 1) term = Polynomial<F>(field) - term;
      dp[mask | (std::size_t{1} << c)] = dp[mask | (std::size_t{1} << c)] + term;
      ++free_before;
    }
  }
  return dp[full];
}

// Faddeev-LeVerrier; divides by k <= n, so the characteristic must be 0 or exceed n.
template <ExactField F>
Polynomial<F> char_poly_leverrier(const Matrix<F>& m) {
  const F& field = m.field();
  const std::size_t n = m.rows();
  Vec<F> c(n + 1, field.zero());
  c[n] = field.one();
  Matrix<F> mk(field, n, n);
  const Matrix<F> id = Matrix<F>::identity(field, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    Matrix<F> amk = m * mk;
    c[n - k] = -(amk.trace() / field.from_int(static_cast<long>(k)));
  }
  return Polynomial<F>(field, std::move(c));
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> divs{1};
  if (n == 0) return divs;
  auto absorb = [&](const mpz_class& prime, unsigned mult) {
    std::vector<mpz_class> next;
    for (const auto& d : divs) {
      mpz_class pw = 1;
      for (unsigned e = 0; e <= mult; ++e) {
        next.push_back(d * pw);
        pw *= prime;
      }
    }
    divs = std::move(next);
  };
  for (mpz_class q = 2; q * q <= n; ++q) {
    unsigned mult = 0;
    while (n % q == 0) {
      n /= q;
      ++mult;
    }
    if (mult) absorb(q, mult);
  }
  if (n > 1) absorb(n, 1);
  return divs;
}

}  // namespace detail

/// Monic characteristic polynomial det(lambda I - M).
template <ExactField F>
Polynomial<F> char_poly(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
  const auto ch = m.field().characteristic();
  if (ch == 0 || ch > m.rows()) return detail::char_poly_leverrier(m);
  return detail::char_poly_by_minors(m);
}

/// Roots of p lying in the field, with multiplicity, in ascending field order.
///
/// Over Q only rational-root-theorem candidates are tried; over GF(p) every
/// residue is tested.
template <ExactField F>
std::vector<std::pair<typename F::scalar, std::size_t>> field_roots(const Polynomial<F>& p) {
  using S = typename F::scalar;
  const F& field = p.field();
  if (p.is_zero()) throw std::invalid_argument("field_roots: zero polynomial");
  std::vector<std::pair<S, std::size_t>> roots;
  Polynomial<F> work = p;

  auto take_root = [&](const S& r) {
    std::size_t mult = 0;
    while (work.degree() > 0) {
      auto [q, rem] = work.divide_linear(r);
      if (!rem.is_zero()) break;
      work = std::move(q);
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  };

  if constexpr (std::is_same_v<F, RationalField>) {
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : p.coeffs()) ints.push_back(c.numerator() * (lcm / c.denominator()));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    std::set<Rational> candidates;
    if (low > 0) candidates.insert(Rational());
    if (static_cast<long>(low) < p.degree()) {
      auto nums = detail::positive_divisors(ints[low]);
      auto dens = detail::positive_divisors(ints.back());
      for (const auto& u : nums)
        for (const auto& v : dens) {
          candidates.insert(Rational(u, v));
          candidates.insert(Rational(mpz_class(-u), v));
        }
    }
    for (const auto& c : candidates) {
      if (work.degree() <= 0) break;
      take_root(c);
    }
  } else {
    for (std::uint64_t x = 0; x < field.characteristic() && work.degree() > 0; ++x) {
      take_root(S(x, field.characteristic()));
    }
  }
  return roots;
}

enum class EigenStatus { Ok, NotDiagonalizable, EigenvalueOutsideField };

inline const char* to_string(EigenStatus s) {
  switch (s) {
    case EigenStatus::Ok: return "ok";
    case EigenStatus::NotDiagonalizable: return "not diagonalizable";
    case EigenStatus::EigenvalueOutsideField: return "eigenvalue outside field";
  }
  return "?";
}

template <ExactField F>
struct EigenData {
  EigenStatus status = EigenStatus::Ok;
  Vec<F> eigenvalues;                         // distinct, ascending field order
  std::vector<std::vector<Vec<F>>> eigenspaces;  // basis of ker(M - theta I) per eigenvalue

  bool ok() const { return status == EigenStatus::Ok; }
};

/// Eigenvalues in the field with exact eigenspace bases, or the reason M is not split-diagonalizable.
template <ExactField F>
EigenData<F> eigen_data(const Matrix<F>& m) {
  if (!m.is_square()) throw std::invalid_argument("eigen_data: matrix not square");
  const F& field = m.field();
  const std::size_t n = m.rows();
  EigenData<F> out;
  auto roots = field_roots(char_poly(m));
  std::size_t total = 0;
  for (const auto& [r, mult] : roots) total += mult;
  std::size_t eig_dims = 0;
  for (const auto& [r, mult] : roots) {
    Matrix<F> shifted = m - Matrix<F>::identity(field, n) * r;
    auto basis = nullspace(shifted);
    eig_dims += basis.size();
    out.eigenvalues.push_back(r);
    out.eigenspaces.push_back(std::move(basis));
  }
  if (total < n) {
    out.status = EigenStatus::EigenvalueOutsideField;
  } else if (eig_dims < n) {
    out.status = EigenStatus::NotDiagonalizable;
  }
  return out;
}

}  // namespace tdlab
