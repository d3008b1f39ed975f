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

#include "seqtf/linalg/skew_block_cache.hpp"

#include <cstring>

#include "seqtf/error.hpp"

namespace seqtf::linalg {
namespace {

void fnv_mix(std::uint64_t& hash, const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    hash ^= p[i];
    hash *= 0x100000001B3ULL;
  }
}

void fnv_mix_matrix(std::uint64_t& hash, const Eigen::MatrixXd& m) {
  const std::int64_t dims[2] = {m.rows(), m.cols()};
  fnv_mix(hash, dims, sizeof(dims));
  fnv_mix(hash, m.data(), sizeof(double) * static_cast<std::size_t>(m.size()));
}

}  // namespace

std::uint64_t factor_fingerprint(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  fnv_mix_matrix(hash, a);
  fnv_mix_matrix(hash, b);
  return hash;
}

SkewBlockCache SkewBlockCache::build(const Eigen::MatrixXd& window_factor,
                                     const Eigen::MatrixXd& shift_factor, ConvolutionPath path,
                                     std::size_t fft_threshold) {
  require(window_factor.rows() >= 1 && shift_factor.rows() >= 1 && window_factor.cols() >= 1 &&
              shift_factor.cols() >= 1,
          ErrorKind::kInvalidArgument, "skew block cache: empty factor");
  SkewBlockCache cache;
  cache.window_rank_ = window_factor.cols();
  cache.shift_rank_ = shift_factor.cols();
  cache.blocks_ = convolve_columns(window_factor, shift_factor, path, fft_threshold).transpose();
  cache.fingerprint_ = factor_fingerprint(window_factor, shift_factor);
  return cache;
}

}  // namespace seqtf::linalg
