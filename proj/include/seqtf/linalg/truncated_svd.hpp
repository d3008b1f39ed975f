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

#include "seqtf/linalg/implicit_matrix.hpp"

namespace seqtf::linalg {

struct SvdOptions {
  std::uint64_t seed = 0;
  // Stop once every leading singular value moves by less than
  // tolerance * sigma_1 between iterations.
  double tolerance = 1e-8;
  int max_iterations = 300;
  // Extra block columns beyond the requested rank.
  int oversampling = 10;
  // When false, hitting max_iterations returns the current estimate instead
  // of throwing. Used for fixed-work runs.
  bool throw_on_cap = true;
};

struct TruncatedSvd {
  Eigen::MatrixXd left;             // rows x rank, orthonormal columns
  Eigen::VectorXd singular_values;  // descending
  int iterations = 0;
};

// Dominant left singular subspace by block subspace iteration with
// Rayleigh-Ritz extraction. `warm_start` (rows x k, any k) seeds the leading
// block columns. Throws ConvergenceError when the cap is hit.
TruncatedSvd truncated_svd(const ImplicitMatrix& op, std::size_t rank, const SvdOptions& options,
                           const Eigen::MatrixXd* warm_start = nullptr);

// Materializes the operator and runs a full dense SVD. Desk-scale only.
TruncatedSvd dense_truncated_svd(const ImplicitMatrix& op, std::size_t rank);

}  // namespace seqtf::linalg
