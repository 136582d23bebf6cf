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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tdlab/exactla/eigen.hpp"
#include "tdlab/exactla/linalg.hpp"
#include "tdlab/exactla/polynomial.hpp"

using namespace tdlab;

namespace {

const RationalField Q;

Matrix<RationalField> qm(const std::vector<std::vector<long>>& rows) { return Matrix<RationalField>::from_ints(Q, rows); }

Rational r(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

// Small random integer matrices with a fixed seed.
Matrix<RationalField> random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::vector<long>> v(rows, std::vector<long>(cols));
  for (auto& row : v)
    for (auto& x : row) x = dist(gen);
  return qm(v);
}

}  // namespace

TEST(Field, RationalParseAndCanonicalForm) {
  EXPECT_EQ(Rational::parse("3/6")->to_string(), "1/2");
  EXPECT_EQ(Rational::parse("-4")->to_string(), "-4");
  EXPECT_EQ(Rational::parse("2/-4")->to_string(), "-1/2");
  EXPECT_FALSE(Rational::parse("1/0"));
  EXPECT_FALSE(Rational::parse("x"));
  EXPECT_FALSE(Rational::parse(""));
  EXPECT_EQ(r(1, 3) + r(1, 6), r(1, 2));
  EXPECT_LT(r(-1), r(1, 2));
}

TEST(Field, ResidueArithmetic) {
  PrimeField f(13);
  auto two = f.from_int(2);
  EXPECT_EQ((two * two.inverse()), f.one());
  EXPECT_EQ(f.from_int(-2).value(), 11u);
  EXPECT_EQ(f.from_rational(r(1, 2)) * two, f.one());
  EXPECT_THROW(f.from_rational(r(1, 13)), std::invalid_argument);
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(f.from_int(1) + PrimeField(7).from_int(1), std::invalid_argument);
}

TEST(Field, SpecParse) {
  EXPECT_EQ(FieldSpec::parse("rational"), FieldSpec::rational());
  EXPECT_EQ(FieldSpec::parse("prime:101").p, 101u);
  EXPECT_THROW(FieldSpec::parse("prime:4"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("reals"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(4294967311ULL), std::invalid_argument);  // prime, but above 2^32
}

TEST(Rref, Examples) {
  auto id = rref(Matrix<RationalField>::identity(Q, 3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

  auto dep = rref(qm({{1, 2}, {2, 4}}));
  EXPECT_EQ(dep.rank, 1u);
  EXPECT_EQ(dep.reduced, qm({{1, 2}, {0, 0}}));

  PrimeField f3(3);
  EXPECT_EQ(rank(Matrix<PrimeField>::from_ints(f3, {{1, 2}, {2, 4}})), 1u);
}

TEST(Rref, PropertiesOnRandomMatrices) {
  std::mt19937 gen(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
    auto m = random_matrix(gen, rows, cols, -2, 2);
    auto once = rref(m);
    // idempotent
    EXPECT_EQ(rref(once.reduced).reduced, once.reduced);
    // rank agrees with the oracle and with the transpose
    EXPECT_EQ(once.rank, oracle::qrank(oracle::to_q(m)));
    EXPECT_EQ(once.rank, rank(m.transpose()));
    // rank-nullity and kernel vectors
    auto ker = nullspace(m);
    EXPECT_EQ(ker.size() + once.rank, cols);
    for (const auto& v : ker) {
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(Rref, PrimeFieldAgreesWithOracle) {
  std::mt19937 gen(7);
  const std::uint64_t p = 5;
  PrimeField f(p);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
    std::vector<std::vector<long>> v(rows, std::vector<long>(cols));
    std::vector<std::vector<std::uint64_t>> o(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) o[i][j] = static_cast<std::uint64_t>(v[i][j] = static_cast<long>(gen() % p));
    EXPECT_EQ(rank(Matrix<PrimeField>::from_ints(f, v)), oracle::prank(o, p));
  }
}

TEST(Subspace, CanonicalMembershipAndEquality) {
  SubspaceBasis<RationalField> a(Q, 3), b(Q, 3);
  EXPECT_TRUE(a.insert({r(1), r(2), r(3)}));
  EXPECT_TRUE(a.insert({r(0), r(1), r(1)}));
  EXPECT_FALSE(a.insert({r(1), r(3), r(4)}));
  // same plane, different generators, inserted in a different order
  EXPECT_TRUE(b.insert({r(0), r(2), r(2)}));
  EXPECT_TRUE(b.insert({r(2), r(5), r(7)}));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains({r(3), r(7), r(10)}));
  EXPECT_FALSE(a.contains({r(0), r(0), r(1)}));
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_THROW(a.contains({r(1)}), std::invalid_argument);
}

TEST(SpanRank, Examples) {
  auto a = qm({{0, 1}, {1, 0}});
  EXPECT_EQ(span_rank(std::vector{Matrix<RationalField>::identity(Q, 2), a, a * a}), 2u);
  EXPECT_EQ(span_rank(std::vector<Matrix<RationalField>>{}), 0u);
  auto e0 = qm({{1, 0}, {0, 0}}), e1 = qm({{0, 0}, {0, 1}});
  EXPECT_EQ(span_rank(std::vector{e0, e1}), 2u);
  EXPECT_THROW(span_rank(std::vector{e0, Matrix<RationalField>::identity(Q, 3)}), std::invalid_argument);
}

TEST(SpanRank, SolveCombination) {
  std::vector<Vec<RationalField>> gens{{r(1), r(0)}, {r(1), r(1)}};
  auto c = solve_combination(Q, gens, {r(3), r(2)});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], r(1));
  EXPECT_EQ((*c)[1], r(2));
  EXPECT_FALSE(solve_combination(Q, {{r(1), r(1)}}, {r(1), r(0)}));
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(qm({{0, 1}, {1, 0}})).to_string(), Polynomial<RationalField>(Q, {r(-1), r(0), r(1)}).to_string());
  EXPECT_EQ(char_poly(qm({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}})), Polynomial<RationalField>(Q, {r(0), r(-4), r(0), r(1)}));
  EXPECT_EQ(char_poly(qm({{5}})), Polynomial<RationalField>::linear(Q, r(5)));
}

TEST(CharPoly, AgreesWithCofactorOracle) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + gen() % 5;
    auto m = random_matrix(gen, n, n);
    auto cp = char_poly(m);
    auto expect = oracle::char_poly_cofactor(oracle::to_q(m));
    ASSERT_EQ(cp.coeffs().size(), expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) EXPECT_EQ(cp.coeffs()[k].value(), expect[k]);
    // Cayley-Hamilton
    EXPECT_TRUE(eval_at_matrix(cp, m).is_zero());
  }
}

TEST(CharPoly, SmallPrimeUsesMinors) {
  // p <= n, so the trace-power recurrence would divide by zero
  std::mt19937 gen(3);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + gen() % 6;
      std::vector<std::vector<long>> v(n, std::vector<long>(n));
      for (auto& row : v)
        for (auto& x : row) x = static_cast<long>(gen() % p);
      auto m = Matrix<PrimeField>::from_ints(f, v);
      auto cp = char_poly(m);
      EXPECT_EQ(cp.degree(), static_cast<long>(n));
      EXPECT_TRUE(cp.is_monic());
      EXPECT_TRUE(eval_at_matrix(cp, m).is_zero());
      // reduce the rational characteristic polynomial mod p
      auto cq = char_poly(Matrix<RationalField>::from_ints(Q, v));
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(cp.coeff(k), f.from_rational(cq.coeff(k)));
    }
  }
}

TEST(Polynomial, EvalAtMatrixExamples) {
  auto a = qm({{0, 1}, {1, 0}});
  EXPECT_TRUE(eval_at_matrix(Polynomial<RationalField>(Q, {r(-1), r(0), r(1)}), a).is_zero());
  EXPECT_EQ(eval_at_matrix(Polynomial<RationalField>::one(Q), a), Matrix<RationalField>::identity(Q, 2));
  EXPECT_EQ(eval_at_matrix(Polynomial<RationalField>(Q, {r(0), r(1)}), a), a);
}

TEST(Polynomial, FromRootsAndDivision) {
  std::vector<Rational> roots{r(1), r(-2), r(1, 3)};
  auto p = Polynomial<RationalField>::from_roots(Q, roots);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_TRUE(p.is_monic());
  for (const auto& x : roots) EXPECT_TRUE(p.eval(x).is_zero());
  auto [q, rem] = p.divide_linear(r(1));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(q * Polynomial<RationalField>::linear(Q, r(1)), p);
  EXPECT_EQ(Polynomial<RationalField>(Q).degree(), -1);
}

TEST(Roots, RationalAndModular) {
  auto p = Polynomial<RationalField>::from_roots(Q, std::vector<Rational>{r(1, 2), r(1, 2), r(-3)});
  auto roots = field_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].first, r(-3));
  EXPECT_EQ(roots[1].first, r(1, 2));
  EXPECT_EQ(roots[1].second, 2u);
  // lambda^2 + 1 has no rational root but splits mod 13 (5^2 = -1)
  EXPECT_TRUE(field_roots(Polynomial<RationalField>(Q, {r(1), r(0), r(1)})).empty());
  PrimeField f(13);
  auto pr = field_roots(Polynomial<PrimeField>(f, {f.one(), f.zero(), f.one()}));
  ASSERT_EQ(pr.size(), 2u);
  EXPECT_EQ(pr[0].first.value(), 5u);
  EXPECT_EQ(pr[1].first.value(), 8u);
}

TEST(Eigen, Examples) {
  auto swap = eigen_data(qm({{0, 1}, {1, 0}}));
  ASSERT_TRUE(swap.ok());
  EXPECT_EQ(swap.eigenvalues, (std::vector<Rational>{r(-1), r(1)}));
  EXPECT_EQ(swap.eigenspaces[0].size(), 1u);
  EXPECT_EQ(swap.eigenspaces[1].size(), 1u);
  EXPECT_EQ(eigen_data(qm({{0, 1}, {0, 0}})).status, EigenStatus::NotDiagonalizable);
  EXPECT_EQ(eigen_data(qm({{0, 1}, {-1, 0}})).status, EigenStatus::EigenvalueOutsideField);
}

TEST(Eigen, EigenvectorsAreEigenvectors) {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    // conjugate a random diagonal matrix by a unit triangular matrix
    const std::size_t n = 1 + gen() % 4;
    auto l = Matrix<RationalField>::identity(Q, n), li = l;
    std::vector<Rational> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(r(static_cast<long>(gen() % 3) - 1));
    auto dm = Matrix<RationalField>::diagonal(Q, diag);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) l(i, j) = r(static_cast<long>(gen() % 3) - 1);
    // unit lower triangular inverse by forward substitution on the identity
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i) {
        Rational s = i == c ? r(1) : r(0);
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * li(k, c);
        li(i, c) = s;
      }
    ASSERT_EQ(l * li, Matrix<RationalField>::identity(Q, n));
    auto m = l * dm * li;
    auto e = eigen_data(m);
    ASSERT_TRUE(e.ok());
    std::size_t total = 0;
    for (std::size_t k = 0; k < e.eigenvalues.size(); ++k) {
      for (const auto& v : e.eigenspaces[k]) {
        auto mv = m.apply(v);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(mv[i], e.eigenvalues[k] * v[i]);
      }
      total += e.eigenspaces[k].size();
    }
    EXPECT_EQ(total, n);
  }
}

TEST(Matrix, ShapeErrors) {
  auto a = qm({{1, 2}}), b = qm({{1, 2}});
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(a + Matrix<RationalField>::identity(Q, 2), std::invalid_argument);
  EXPECT_THROW(a.trace(), std::invalid_argument);
  EXPECT_EQ((qm({{1, 2}, {3, 4}}) * qm({{0, 1}, {1, 0}})), qm({{2, 1}, {4, 3}}));
}
