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

// Streaming kernels shared by the global and local mode operators.

#include <cstddef>
#include <memory>

#include <Eigen/Dense>

#include "seqtf/data/positional_tensor.hpp"
#include "seqtf/linalg/implicit_matrix.hpp"

namespace seqtf::models::detail {

// Mode 1 (rows are users, partner is the item factor) or mode 2 (rows are
// items, partner is the user factor) of a compressed unfolding whose column
// index is partner + r_partner * kernel_row. Each entry at position q carries
// weight d_item and the kernel column q.
linalg::ImplicitMatrix partner_kernel_operator(const data::SparsePositionalTensor& tensor, int mode,
                                               std::shared_ptr<const Eigen::VectorXd> scaling,
                                               std::shared_ptr<const Eigen::MatrixXd> partner,
                                               std::shared_ptr<const Eigen::MatrixXd> kernel,
                                               std::size_t chunks);

// Same operator with the kernel column produced per entry by the skew-diagonal
// sum over (window, shift) factor rows instead of a precomputed table.
linalg::ImplicitMatrix partner_skew_operator(const data::SparsePositionalTensor& tensor, int mode,
                                             std::shared_ptr<const Eigen::VectorXd> scaling,
                                             std::shared_ptr<const Eigen::MatrixXd> partner,
                                             std::shared_ptr<const Eigen::MatrixXd> window,
                                             std::shared_ptr<const Eigen::MatrixXd> shift,
                                             std::size_t chunks);

// vec(W_A^T H(e_q) W_S), window index fastest.
Eigen::VectorXd skew_block(const Eigen::MatrixXd& window, const Eigen::MatrixXd& shift,
                           Eigen::Index q);

}  // namespace seqtf::models::detail
