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

#include "seqtf/models/training.hpp"

namespace seqtf::models {

linalg::TruncatedSvd leading_subspace(const linalg::ImplicitMatrix& op, std::size_t rank,
                                      const TrainOptions& options, std::uint64_t seed,
                                      const Eigen::MatrixXd* warm_start) {
  if (options.method == SvdMethod::kExact) return linalg::dense_truncated_svd(op, rank);
  linalg::SvdOptions svd = options.svd;
  svd.seed = seed;
  return linalg::truncated_svd(op, rank, svd, warm_start);
}

}  // namespace seqtf::models
