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

#include "seqtf/models/ga_operator.hpp"

#include <memory>

#include "mode_kernels.hpp"
#include "seqtf/error.hpp"
#include "seqtf/linalg/parallel.hpp"

namespace seqtf::models {
namespace {

void check_shapes(const data::SparsePositionalTensor& tensor, const Eigen::VectorXd& scaling,
                  const attention::AttentionMatrix& attention, const GaFactors& f, int mode) {
  require(mode >= 1 && mode <= 3, ErrorKind::kInvalidArgument, "global model has modes 1..3");
  const auto M = static_cast<Eigen::Index>(tensor.num_users());
  const auto N = static_cast<Eigen::Index>(tensor.num_items());
  const auto K = static_cast<Eigen::Index>(tensor.max_length());
  require(scaling.size() == N, ErrorKind::kInvalidArgument, "scaling length must equal N");
  require(attention.size() == tensor.max_length(), ErrorKind::kInvalidArgument,
          "attention size must equal K");
  if (mode != 1) {
    require(f.user.rows() == M, ErrorKind::kInvalidArgument, "user factor must have M rows");
  }
  if (mode != 2) {
    require(f.item.rows() == N, ErrorKind::kInvalidArgument, "item factor must have N rows");
  }
  if (mode != 3) {
    require(f.attended.rows() == K, ErrorKind::kInvalidArgument,
            "positional factor must have K rows");
  }
}

// Mode 3: Y3[k, a + r1 b] = sum over entries of U(i,a) d_j V(j,b) A(q,k).
linalg::ImplicitMatrix position_operator(const data::SparsePositionalTensor& tensor,
                                         const Eigen::VectorXd& scaling,
                                         const attention::AttentionMatrix& attention,
                                         const GaFactors& f, std::size_t chunks) {
  auto user = std::make_shared<const Eigen::MatrixXd>(f.user);
  auto item_scaled = std::make_shared<const Eigen::MatrixXd>(scaling.asDiagonal() * f.item);
  auto attn = std::make_shared<const attention::AttentionMatrix>(attention);
  const data::SparsePositionalTensor* x = &tensor;
  const Eigen::Index r1 = f.user.cols();
  const Eigen::Index r2 = f.item.cols();
  const auto K = static_cast<Eigen::Index>(tensor.max_length());
  const std::size_t users = tensor.num_users();

  auto apply = [=](const Eigen::MatrixXd& z) {
    const Eigen::Index nb = z.cols();
    // z viewed as r1 x (r2 nb); u_i^T times it gives g_i for every column.
    const Eigen::Map<const Eigen::MatrixXd> zall(z.data(), r1, r2 * nb);
    const Eigen::MatrixXd t = linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(K, nb),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          Eigen::RowVectorXd g(r2 * nb);
          for (std::size_t u = begin; u < end; ++u) {
            const auto entries = x->user_entries(static_cast<std::int32_t>(u));
            if (entries.empty()) continue;
            g.noalias() = user->row(static_cast<Eigen::Index>(u)) * zall;
            const Eigen::Map<const Eigen::MatrixXd> gi(g.data(), r2, nb);
            for (const auto& e : entries) acc.row(e.position).noalias() += item_scaled->row(e.item) * gi;
          }
        });
    return attn->apply_transpose(t);
  };

  auto adjoint = [=](const Eigen::MatrixXd& y) {
    const Eigen::Index nb = y.cols();
    const Eigen::MatrixXd ya = attn->apply(y);
    const Eigen::MatrixXd out = linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(r1, r2 * nb),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          Eigen::MatrixXd mi(r2, nb);
          for (std::size_t u = begin; u < end; ++u) {
            const auto entries = x->user_entries(static_cast<std::int32_t>(u));
            if (entries.empty()) continue;
            mi.setZero();
            for (const auto& e : entries) {
              mi.noalias() += item_scaled->row(e.item).transpose() * ya.row(e.position);
            }
            acc.noalias() += user->row(static_cast<Eigen::Index>(u)).transpose() *
                             Eigen::Map<const Eigen::RowVectorXd>(mi.data(), mi.size());
          }
        });
    return Eigen::MatrixXd(Eigen::Map<const Eigen::MatrixXd>(out.data(), r1 * r2, nb));
  };

  return linalg::ImplicitMatrix(K, r1 * r2, apply, adjoint);
}

}  // namespace

linalg::ImplicitMatrix ga_mode_operator(const data::SparsePositionalTensor& tensor,
                                        const Eigen::VectorXd& scaling,
                                        const attention::AttentionMatrix& attention,
                                        const GaFactors& factors, int mode,
                                        const OperatorOptions& options) {
  check_shapes(tensor, scaling, attention, factors, mode);
  const std::size_t chunks = options.chunks();
  if (mode == 3) return position_operator(tensor, scaling, attention, factors, chunks);
  auto weights = std::make_shared<const Eigen::VectorXd>(scaling);
  auto kernel = std::make_shared<const Eigen::MatrixXd>(factors.attended.transpose());
  auto partner = std::make_shared<const Eigen::MatrixXd>(mode == 1 ? factors.item : factors.user);
  return detail::partner_kernel_operator(tensor, mode, weights, partner, kernel, chunks);
}

}  // namespace seqtf::models
