/*
Copyright 2026 The perfcol Authors

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

#include <perfcol/matrix.hpp>

#include <gtest/gtest.h>

#include "generators.hpp"

namespace perfcol {
namespace {

using testing::random_matrix;
using testing::random_polynomial;

TEST(Rational, ParseCanonicalises) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("3/-4"), std::invalid_argument);
}

TEST(Rational, PrintParseRoundTrip) {
  for (int trial = 0; trial < 200; ++trial) {
    const RationalMatrix m = random_matrix(1, 1, -50, 50);
    const std::string text = to_string(m(0, 0));
    EXPECT_EQ(to_string(parse_rational(text)), text);
    EXPECT_EQ(parse_rational(text), m(0, 0));
  }
  const Rational big = parse_rational("123456789012345678901234567891/7");
  EXPECT_EQ(to_string(big), "123456789012345678901234567891/7");
}

TEST(MatrixMul, IdentityInvolutionAnnihilator) {
  const RationalMatrix a{{1, 2}, {Rational(3, 4), -5}};
  EXPECT_EQ(matrix_mul(RationalMatrix::identity(2), a), a);
  const RationalMatrix swap{{0, 1}, {1, 0}};
  EXPECT_EQ(matrix_mul(swap, swap), RationalMatrix::identity(2));
  EXPECT_EQ(matrix_mul(a, RationalMatrix(2, 2)), RationalMatrix(2, 2));
}

TEST(MatrixMul, DimensionMismatchThrows) {
  EXPECT_THROW(matrix_mul(RationalMatrix(2, 3), RationalMatrix(2, 3)), std::invalid_argument);
}

TEST(MatrixPow, BaseCasesAndC4Square) {
  const RationalMatrix c4 = testing::cycle_matrix(4);
  EXPECT_EQ(matrix_pow(c4, 0), RationalMatrix::identity(4));
  EXPECT_EQ(matrix_pow(c4, 1), c4);
  // Walks of length 2 on C4: 2 back-and-forth walks to itself, 2 to the opposite vertex.
  const RationalMatrix expected{{2, 0, 2, 0}, {0, 2, 0, 2}, {2, 0, 2, 0}, {0, 2, 0, 2}};
  EXPECT_EQ(matrix_pow(c4, 2), expected);
  EXPECT_THROW(matrix_pow(RationalMatrix(2, 3), 2), std::invalid_argument);
}

TEST(MatrixPow, ExponentsAdd) {
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix a = random_matrix(3, 3);
    for (unsigned i = 0; i <= 4; ++i)
      for (unsigned j = 0; j <= 4; ++j) EXPECT_EQ(matrix_pow(a, i + j), matrix_mul(matrix_pow(a, i), matrix_pow(a, j)));
  }
}

TEST(Polynomial, CanonicalZeroAndTrailingZeros) {
  EXPECT_EQ(Polynomial({0, 0, 0}).coefficients().size(), 1U);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial({1, 2, 0}).degree(), 1U);
  EXPECT_EQ(Polynomial({-2, 0, 1}).to_string(), "x^2 - 2");
  EXPECT_EQ(Polynomial({Rational(1, 2), -1}).to_string(), "-x + 1/2");
}

TEST(EvalPoly, BasicCases) {
  const RationalMatrix a = random_matrix(4, 4);
  EXPECT_EQ(eval_poly(Polynomial::x(), a), a);
  EXPECT_EQ(eval_poly(Polynomial::constant(Rational(5, 3)), a), RationalMatrix::identity(4) * Rational(5, 3));
  EXPECT_THROW(eval_poly(Polynomial::x(), RationalMatrix(2, 3)), std::invalid_argument);
}

TEST(EvalPoly, C6DistanceTwo) {
  // Oracle: cyclic distance on Z_6.
  RationalMatrix dist2(6, 6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) {
      const int d = std::abs(u - v);
      if (std::min(d, 6 - d) == 2) dist2(u, v) = 1;
    }
  EXPECT_EQ(eval_poly(Polynomial({-2, 0, 1}), testing::cycle_matrix(6)), dist2);
}

TEST(EvalPoly, RingHomomorphism) {
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix a = random_matrix(3, 3);
    const Polynomial p = random_polynomial(-3, 3, 3);
    const Polynomial q = random_polynomial(-3, 3, 3);
    EXPECT_EQ(eval_poly(p * q, a), matrix_mul(eval_poly(p, a), eval_poly(q, a)));
    EXPECT_EQ(eval_poly(p + q, a), eval_poly(p, a) + eval_poly(q, a));
  }
}

TEST(L1RowDistance, Examples) {
  const RationalMatrix s{{0, 4}, {3, 1}};
  EXPECT_EQ(l1_row_distance(s, 0, 0), 0);
  EXPECT_EQ(l1_row_distance(s, 0, 1), 6);  // 2|r - (b+c)| = 2|4 - 7|
  const RationalMatrix e{{1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(l1_row_distance(e, 0, 1), 2);
  EXPECT_THROW(l1_row_distance(s, 0, 2), std::out_of_range);
}

TEST(L1RowDistance, MetricAxioms) {
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMatrix a = random_matrix(3, 5, -4, 4);
    for (std::size_t u = 0; u < 3; ++u)
      for (std::size_t v = 0; v < 3; ++v) {
        const Rational duv = l1_row_distance(a, u, v);
        EXPECT_EQ(duv, l1_row_distance(a, v, u));
        EXPECT_GE(duv, 0);
        const bool rows_equal = std::equal(a.row(u).begin(), a.row(u).end(), a.row(v).begin());
        EXPECT_EQ(duv == 0, rows_equal);
        for (std::size_t w = 0; w < 3; ++w) EXPECT_LE(duv, l1_row_distance(a, u, w) + l1_row_distance(a, w, v));
      }
  }
}

}  // namespace
}  // namespace perfcol
