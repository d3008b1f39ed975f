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
#include "seqtf/models/training.hpp"

namespace seqtf::models {

// Factors of the globally attended model. Each mode's operator ignores its
// own factor.
struct GaFactors {
  Eigen::MatrixXd user;      // M x r1
  Eigen::MatrixXd item;      // N x r2
  Eigen::MatrixXd attended;  // W_A = A W, K x r3
};

// Compressed unfolding of X x2 D x3 A^T along `mode` (1 users, 2 items,
// 3 positions), contracted with the other two factors. Shapes:
//   mode 1: M x r2 r3, column b + r2 c
//   mode 2: N x r1 r3, column a + r1 c
//   mode 3: K x r1 r2, column a + r1 b
// The tensor must outlive the returned operator.
linalg::ImplicitMatrix ga_mode_operator(const data::SparsePositionalTensor& tensor,
                                        const Eigen::VectorXd& scaling,
                                        const attention::AttentionMatrix& attention,
                                        const GaFactors& factors, int mode,
                                        const OperatorOptions& options = {});

}  // namespace seqtf::models
