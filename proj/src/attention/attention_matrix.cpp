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

#include "seqtf/attention/attention_matrix.hpp"

#include <cmath>

#include "seqtf/error.hpp"

namespace seqtf::attention {

AttentionMatrix AttentionMatrix::build(std::size_t size, double decay, AttentionMode mode) {
  require(size >= 1, ErrorKind::kInvalidArgument, "attention size must be at least 1");
  require(std::isfinite(decay) && decay >= 0.0, ErrorKind::kInvalidArgument,
          "attention decay exponent must be non-negative");
  std::vector<double> weights(size, 0.0);
  weights[0] = 1.0;
  if (mode == AttentionMode::kPowerDecay) {
    for (std::size_t k = 2; k <= size; ++k) {
      weights[k - 1] = std::pow(static_cast<double>(k), -decay);
    }
  }
  return AttentionMatrix(std::move(weights), decay, mode);
}

Eigen::MatrixXd AttentionMatrix::apply(const Eigen::MatrixXd& x) const {
  require(static_cast<std::size_t>(x.rows()) == size(), ErrorKind::kInvalidArgument,
          "attention apply: row mismatch");
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, x.cols());
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c <= r; ++c) {
      const double a = weights_[r - c];
      if (a != 0.0) out.row(r) += a * x.row(c);
    }
  }
  return out;
}

Eigen::MatrixXd AttentionMatrix::apply_transpose(const Eigen::MatrixXd& x) const {
  require(static_cast<std::size_t>(x.rows()) == size(), ErrorKind::kInvalidArgument,
          "attention apply_transpose: row mismatch");
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, x.cols());
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = c; r < n; ++r) {
      const double a = weights_[r - c];
      if (a != 0.0) out.row(c) += a * x.row(r);
    }
  }
  return out;
}

Eigen::VectorXd AttentionMatrix::apply(const Eigen::VectorXd& x) const {
  return apply(Eigen::MatrixXd(x)).col(0);
}

Eigen::VectorXd AttentionMatrix::apply_transpose(const Eigen::VectorXd& x) const {
  return apply_transpose(Eigen::MatrixXd(x)).col(0);
}

Eigen::MatrixXd AttentionMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c <= r; ++c) out(r, c) = weights_[r - c];
  }
  return out;
}

Eigen::MatrixXd triangular_restore(const AttentionMatrix& attention, const Eigen::MatrixXd& factor) {
  const auto weights = attention.weights();
  require(weights[0] != 0.0, ErrorKind::kNumeric, "singular attention matrix (a_1 = 0)");
  require(static_cast<std::size_t>(factor.rows()) == attention.size(),
          ErrorKind::kInvalidArgument, "restore: factor rows must equal attention size");
  // A^T is upper triangular with (c, r) = a_{r-c+1}; solve from the bottom.
  const auto n = static_cast<Eigen::Index>(attention.size());
  Eigen::MatrixXd restored(n, factor.cols());
  for (Eigen::Index c = n - 1; c >= 0; --c) {
    Eigen::RowVectorXd acc = factor.row(c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const double a = weights[r - c];
      if (a != 0.0) acc -= a * restored.row(r);
    }
    restored.row(c) = acc / weights[0];
  }
  return restored;
}

}  // namespace seqtf::attention
