// Copyright 2026 The seqtf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dense_oracle.hpp"
#include "seqtf/attention/attention_matrix.hpp"
#include "seqtf/attention/positional.hpp"
#include "seqtf/error.hpp"
#include "seqtf/linalg/random.hpp"

namespace seqtf::attention {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST(AttentionMatrix, UniformDecayIsLowerOnes) {
  const auto A = AttentionMatrix::build(3, 0.0);
  MatrixXd expected(3, 3);
  expected << 1, 0, 0, 1, 1, 0, 1, 1, 1;
  EXPECT_EQ(A.dense(), expected);
}

TEST(AttentionMatrix, HarmonicDiagonals) {
  const auto A = AttentionMatrix::build(3, 1.0);
  EXPECT_DOUBLE_EQ(A(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(A(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(A(2, 0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(A(2, 1), 0.5);
  EXPECT_DOUBLE_EQ(A(0, 2), 0.0);
}

TEST(AttentionMatrix, SingleElement) {
  for (const double f : {0.0, 0.7, 3.0}) EXPECT_EQ(AttentionMatrix::build(1, f).dense(), MatrixXd::Ones(1, 1));
}

TEST(AttentionMatrix, IdentityMode) {
  const auto A = AttentionMatrix::build(4, 0.5, AttentionMode::kIdentity);
  EXPECT_EQ(A.dense(), MatrixXd::Identity(4, 4));
}

TEST(AttentionMatrix, RejectsBadArguments) {
  EXPECT_THROW(AttentionMatrix::build(3, -0.1), Error);
  EXPECT_THROW(AttentionMatrix::build(0, 1.0), Error);
}

TEST(AttentionMatrix, MatchesDenseOracleAndApplies) {
  for (const double f : {0.0, 0.5, 1.0, 2.0}) {
    const auto A = AttentionMatrix::build(9, f);
    const MatrixXd oracle = testing::dense_attention(9, f, false);
    EXPECT_LT(testing::max_abs(A.dense() - oracle), 1e-15);
    const MatrixXd x = linalg::random_gaussian(9, 3, 4);
    EXPECT_LT(testing::max_abs(A.apply(x) - oracle * x), 1e-13);
    EXPECT_LT(testing::max_abs(A.apply_transpose(x) - oracle.transpose() * x), 1e-13);
    const VectorXd v = x.col(0);
    EXPECT_LT((A.apply(v) - oracle * v).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(AttentionMatrix, BilinearFormCorrelatesEarlierPositions) {
  const std::size_t K = 8;
  const auto A = AttentionMatrix::build(K, 0.7);
  const MatrixXd dense = A.dense();
  const MatrixXd C = dense * dense.transpose();
  const MatrixXd u = linalg::random_gaussian(K, 1, 1), v = linalg::random_gaussian(K, 1, 2);
  EXPECT_NEAR((A.apply_transpose(u).transpose() * A.apply_transpose(v))(0, 0), (u.transpose() * C * v)(0, 0), 1e-12);
  const auto w = A.weights();
  for (std::size_t q = 0; q < K; ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      // Row q of A meets row p of A on the first p+1 columns.
      double expected = 0.0;
      for (std::size_t m = 0; m <= p; ++m) expected += w[m] * w[q - p + m];
      EXPECT_NEAR(C(q, p), expected, 1e-12);
      EXPECT_GT(C(q, p), 0.0);
    }
  }
}

TEST(TriangularRestore, IdentityIsNoOp) {
  const auto A = AttentionMatrix::build(5, 1.0, AttentionMode::kIdentity);
  const MatrixXd W = linalg::random_orthonormal(5, 2, 3);
  EXPECT_EQ(triangular_restore(A, W), W);
}

TEST(TriangularRestore, HandWorkedTwoByTwo) {
  // A = [[1, 0], [1/2, 1]], so A^T X = W reads x0 + x1 / 2 = w0, x1 = w1.
  const auto A = AttentionMatrix::build(2, 1.0);
  MatrixXd W(2, 2);
  W << 1, 0, 0, 1;
  MatrixXd expected(2, 2);
  expected << 1, -0.5, 0, 1;
  EXPECT_EQ(triangular_restore(A, W), expected);
}

TEST(TriangularRestore, ResidualAndWeightedOrthogonality) {
  for (const double f : {0.0, 0.3, 1.0, 2.5}) {
    for (const std::size_t K : {3u, 40u, 120u}) {
      const auto A = AttentionMatrix::build(K, f);
      const MatrixXd dense = A.dense();
      const std::size_t r = std::min<std::size_t>(K, 4);
      const MatrixXd W = linalg::random_orthonormal(K, r, K);
      const MatrixXd restored = triangular_restore(A, W);
      EXPECT_LT(testing::max_abs(dense.transpose() * restored - W), 1e-12);
      const MatrixXd gram = restored.transpose() * dense * dense.transpose() * restored;
      EXPECT_LT(testing::max_abs(gram - MatrixXd::Identity(W.cols(), W.cols())), 1e-10);
      const MatrixXd random = linalg::random_gaussian(K, 3, 7);
      EXPECT_LT(testing::max_abs(dense.transpose() * triangular_restore(A, random) - random), 1e-12);
    }
  }
}

TEST(TriangularRestore, ShapeMismatch) {
  EXPECT_THROW(triangular_restore(AttentionMatrix::build(3, 1.0), MatrixXd::Ones(4, 1)), Error);
}

TEST(EncodeHistory, RightAlignsAndTruncates) {
  const std::vector<std::int32_t> items{7, 8, 9};
  const auto short_k = encode_history(items, 5);
  ASSERT_EQ(short_k.size(), 3u);
  EXPECT_EQ(short_k[0], (PositionedItem{7, 2}));
  EXPECT_EQ(short_k[2], (PositionedItem{9, 4}));
  const auto truncated = encode_history(items, 2);
  ASSERT_EQ(truncated.size(), 2u);
  EXPECT_EQ(truncated[0], (PositionedItem{8, 0}));
}

TEST(ShiftLeft, DropsFirstAndVacatesLast) {
  const std::vector<PositionedItem> full{{4, 0}, {5, 1}, {6, 2}};
  const auto shifted = shift_left(full);
  EXPECT_EQ(shifted, (std::vector<PositionedItem>{{5, 0}, {6, 1}}));
}

TEST(ShiftLeft, SingleAndEmpty) {
  const std::vector<PositionedItem> one{{3, 4}};
  EXPECT_EQ(shift_left(one), (std::vector<PositionedItem>{{3, 3}}));
  EXPECT_TRUE(shift_left(std::vector<PositionedItem>{}).empty());
}

TEST(ShiftLeft, TwiceEqualsDenseShiftSquared) {
  const std::size_t K = 6;
  const std::vector<std::int32_t> items{0, 1, 2, 3, 4};
  const auto entries = encode_history(items, K);
  const auto twice = shift_left(shift_left(entries));
  // Dense P (items x positions) times the lower shift matrix, twice.
  MatrixXd P = MatrixXd::Zero(5, K);
  for (const auto& e : entries) P(e.item, e.position) = 1.0;
  MatrixXd S = MatrixXd::Zero(K, K);
  for (std::size_t k = 0; k + 1 < K; ++k) S(k + 1, k) = 1.0;
  const MatrixXd expected = P * S * S;
  MatrixXd got = MatrixXd::Zero(5, K);
  for (const auto& e : twice) got(e.item, e.position) = 1.0;
  EXPECT_EQ(got, expected);
  for (std::size_t k = 0; k < twice.size(); ++k) EXPECT_EQ(twice[k].position, entries[k + 1].position - 2);
}

TEST(Hankel, OneHotExample) {
  const std::vector<double> p{0, 1, 0, 0};
  MatrixXd expected(2, 3);
  expected << 0, 1, 0, 1, 0, 0;
  EXPECT_EQ(hankelize(p, 2).to_dense(), expected);
}

TEST(Hankel, UnitWindowIsTheVector) {
  const std::vector<double> p{3, 1, 4, 1, 5};
  const auto h = hankelize(p, 1);
  EXPECT_EQ(h.rows(), 1u);
  EXPECT_EQ(h.to_dense(), Eigen::Map<const Eigen::RowVectorXd>(p.data(), 5).eval());
}

TEST(Hankel, RoundTripAndNoCopy) {
  const std::vector<double> p{1, 2, 3, 4, 5, 6, 7};
  const auto h = hankelize(p, 3);
  EXPECT_EQ(h.source().data(), p.data());
  std::vector<double> back;
  for (std::size_t l = 0; l < h.rows(); ++l) back.push_back(h(l, 0));
  for (std::size_t s = 1; s < h.cols(); ++s) back.push_back(h(h.rows() - 1, s));
  EXPECT_EQ(back, p);
}

TEST(Hankel, OneHotHasSingleSkewDiagonal) {
  for (std::size_t q = 0; q < 6; ++q) {
    std::vector<double> p(6, 0.0);
    p[q] = 1.0;
    const MatrixXd h = hankelize(p, 3).to_dense();
    for (Eigen::Index l = 0; l < h.rows(); ++l) {
      for (Eigen::Index s = 0; s < h.cols(); ++s) EXPECT_EQ(h(l, s), l + s == static_cast<Eigen::Index>(q) ? 1.0 : 0.0);
    }
  }
}

TEST(Hankel, Linear) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::vector<double> p(8), q(8), mix(8);
  for (std::size_t k = 0; k < 8; ++k) {
    p[k] = g(rng);
    q[k] = g(rng);
    mix[k] = 2.5 * p[k] - 0.75 * q[k];
  }
  const MatrixXd expected = 2.5 * hankelize(p, 4).to_dense() - 0.75 * hankelize(q, 4).to_dense();
  EXPECT_LT(testing::max_abs(hankelize(mix, 4).to_dense() - expected), 1e-14);
}

TEST(Hankel, WindowTooLarge) {
  const std::vector<double> p{1, 2};
  EXPECT_THROW(hankelize(p, 3), Error);
  EXPECT_THROW(hankelize(p, 0), Error);
}

}  // namespace
}  // namespace seqtf::attention
