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
#include <memory>

#include <Eigen/Dense>

#include "seqtf/linalg/convolution.hpp"
#include "seqtf/linalg/implicit_matrix.hpp"
#include "seqtf/linalg/truncated_svd.hpp"
#include "seqtf/models/recommender.hpp"

namespace seqtf::models {

struct OperatorOptions {
  std::size_t threads = 1;
  // Forces a single reduction chunk so sums are bit-reproducible across
  // thread counts.
  bool deterministic = false;
  // Precompute the per-position blocks of the local model; off evaluates
  // them per entry.
  bool use_cache = true;
  linalg::ConvolutionPath path = linalg::ConvolutionPath::kAuto;
  std::size_t fft_threshold = linalg::kDefaultFftThreshold;

  std::size_t chunks() const { return deterministic ? 1 : threads; }
};

enum class SvdMethod {
  kIterative,
  kExact,  // materializes the compressed unfolding; small problems only
};

struct TrainOptions {
  OperatorOptions operators;
  linalg::SvdOptions svd;
  SvdMethod method = SvdMethod::kIterative;
};

linalg::TruncatedSvd leading_subspace(const linalg::ImplicitMatrix& op, std::size_t rank,
                                      const TrainOptions& options, std::uint64_t seed,
                                      const Eigen::MatrixXd* warm_start = nullptr);

// A trainer that improves its model one alternating sweep at a time.
class SweepTrainer {
 public:
  virtual ~SweepTrainer() = default;
  virtual void sweep() = 0;
  virtual int sweeps_done() const = 0;
  // Squared norm of the projected tensor after the latest sweep.
  virtual double fit() const = 0;
  virtual std::unique_ptr<Recommender> snapshot() const = 0;
};

}  // namespace seqtf::models
