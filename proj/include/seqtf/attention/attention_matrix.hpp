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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace seqtf::attention {

enum class AttentionMode {
  kPowerDecay,  // a_k = k^-f
  kIdentity,    // a_1 = 1, all other diagonals 0
};

// Banded lower-triangular Toeplitz matrix A with entry (r, c) = a_{r-c+1}
// for r >= c. Only the diagonal weights are stored; weights()[0] is a_1.
//
// A acts on positional vectors: A^T spreads an observation at position k
// back onto the preceding positions, so after the map two items of one user
// stop being orthogonal. The weights are not normalized.
class AttentionMatrix {
 public:
  static AttentionMatrix build(std::size_t size, double decay,
                               AttentionMode mode = AttentionMode::kPowerDecay);

  std::size_t size() const { return weights_.size(); }
  double decay() const { return decay_; }
  AttentionMode mode() const { return mode_; }
  std::span<const double> weights() const { return weights_; }

  double operator()(std::size_t row, std::size_t col) const {
    return row >= col ? weights_[row - col] : 0.0;
  }

  // A * X and A^T * X, column by column in O(size^2) per column.
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd apply_transpose(const Eigen::MatrixXd& x) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd dense() const;

 private:
  AttentionMatrix(std::vector<double> weights, double decay, AttentionMode mode)
      : weights_(std::move(weights)), decay_(decay), mode_(mode) {}

  std::vector<double> weights_;
  double decay_ = 0.0;
  AttentionMode mode_ = AttentionMode::kPowerDecay;
};

// Solves A^T X = W by back-substitution over the banded system; the inverse
// is never formed. Throws when a_1 == 0.
Eigen::MatrixXd triangular_restore(const AttentionMatrix& attention, const Eigen::MatrixXd& factor);

}  // namespace seqtf::attention
