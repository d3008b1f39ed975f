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

#include "seqtf/linalg/implicit_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "seqtf/error.hpp"
#include "seqtf/linalg/random.hpp"

namespace seqtf::linalg {

ImplicitMatrix ImplicitMatrix::from_dense(Eigen::MatrixXd matrix) {
  auto shared = std::make_shared<const Eigen::MatrixXd>(std::move(matrix));
  return ImplicitMatrix(
      shared->rows(), shared->cols(),
      [shared](const Eigen::MatrixXd& x) -> Eigen::MatrixXd { return *shared * x; },
      [shared](const Eigen::MatrixXd& y) -> Eigen::MatrixXd { return shared->transpose() * y; });
}

Eigen::MatrixXd ImplicitMatrix::apply(const Eigen::MatrixXd& x) const {
  require(x.rows() == cols_, ErrorKind::kInvalidArgument, "implicit matrix: apply shape mismatch");
  return apply_(x);
}

Eigen::MatrixXd ImplicitMatrix::apply_adjoint(const Eigen::MatrixXd& x) const {
  require(x.rows() == rows_, ErrorKind::kInvalidArgument,
          "implicit matrix: adjoint shape mismatch");
  return apply_adjoint_(x);
}

Eigen::MatrixXd ImplicitMatrix::to_dense() const {
  return apply(Eigen::MatrixXd::Identity(cols_, cols_));
}

double adjoint_mismatch(const ImplicitMatrix& op, int trials, std::uint64_t seed) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::VectorXd v = random_gaussian(op.cols(), 1, mix_seed(seed, 2 * t)).col(0);
    const Eigen::VectorXd u = random_gaussian(op.rows(), 1, mix_seed(seed, 2 * t + 1)).col(0);
    const double lhs = op.matvec(v).dot(u);
    const double rhs = v.dot(op.rmatvec(u));
    const double scale = std::max(u.norm() * v.norm(), 1e-300);
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

}  // namespace seqtf::linalg
