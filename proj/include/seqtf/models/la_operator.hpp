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

#include <Eigen/Dense>

#include "seqtf/attention/attention_matrix.hpp"
#include "seqtf/data/positional_tensor.hpp"
#include "seqtf/linalg/implicit_matrix.hpp"
#include "seqtf/linalg/skew_block_cache.hpp"
#include "seqtf/models/training.hpp"

namespace seqtf::models {

struct LaFactors {
  Eigen::MatrixXd user;      // M x r1
  Eigen::MatrixXd item;      // N x r2
  Eigen::MatrixXd attended;  // W_A = A_L W_L, K_L x r3
  Eigen::MatrixXd shift;     // W_S, K_S x r4
};

// Compressed unfolding of the hankelized tensor X~ x2 D x3 A_L^T along
// `mode`, contracted with the other three factors. Shapes:
//   mode 1: M   x r2 r3 r4, column b + r2 (c + r3 e)
//   mode 2: N   x r1 r3 r4, column a + r1 (c + r3 e)
//   mode 3: K_L x r1 r2 r4, column a + r1 (b + r2 e)
//   mode 4: K_S x r1 r2 r3, column a + r1 (b + r2 c)
// With options.use_cache, modes 1 and 2 read `cache`, which must have been
// built from (attended, shift); a stale cache is an error. The tensor must
// outlive the returned operator.
linalg::ImplicitMatrix la_mode_operator(const data::SparsePositionalTensor& tensor,
                                        const Eigen::VectorXd& scaling,
                                        const attention::AttentionMatrix& window_attention,
                                        const LaFactors& factors,
                                        const linalg::SkewBlockCache* cache, int mode,
                                        const OperatorOptions& options = {});

}  // namespace seqtf::models
