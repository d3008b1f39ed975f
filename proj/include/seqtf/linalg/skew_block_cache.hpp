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
#include <cstdint>

#include <Eigen/Dense>

#include "seqtf/linalg/convolution.hpp"

namespace seqtf::linalg {

// Order-sensitive hash of the bytes of two matrices; identifies the factor
// state a cache was built from.
std::uint64_t factor_fingerprint(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// The K distinct r3 x r4 blocks W_A^T H(e_q) W_S, one per skew-diagonal
// offset q. Every Hankel slice of the positional tensor is some H(e_q), so
// these blocks are all the mode-1 and mode-2 products ever need.
class SkewBlockCache {
 public:
  // `window_factor` is K_L x r3, `shift_factor` is K_S x r4.
  static SkewBlockCache build(const Eigen::MatrixXd& window_factor,
                              const Eigen::MatrixXd& shift_factor,
                              ConvolutionPath path = ConvolutionPath::kAuto,
                              std::size_t fft_threshold = kDefaultFftThreshold);

  std::size_t length() const { return static_cast<std::size_t>(blocks_.cols()); }
  Eigen::Index window_rank() const { return window_rank_; }
  Eigen::Index shift_rank() const { return shift_rank_; }

  // r3 x r4 block for offset q.
  Eigen::Map<const Eigen::MatrixXd> block(std::size_t q) const {
    return Eigen::Map<const Eigen::MatrixXd>(blocks_.col(static_cast<Eigen::Index>(q)).data(),
                                             window_rank_, shift_rank_);
  }
  // (r3 * r4) x K; column q is the column-major vec of block(q).
  const Eigen::MatrixXd& stacked() const { return blocks_; }

  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  Eigen::MatrixXd blocks_;
  Eigen::Index window_rank_ = 0;
  Eigen::Index shift_rank_ = 0;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace seqtf::linalg
