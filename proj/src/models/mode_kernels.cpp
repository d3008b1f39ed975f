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

#include "mode_kernels.hpp"

#include "seqtf/error.hpp"
#include "seqtf/linalg/kron.hpp"
#include "seqtf/linalg/parallel.hpp"

namespace seqtf::models::detail {
namespace {

struct Roles {
  Eigen::Index rows;
  bool by_user;  // mode 1
};

Roles roles_for(const data::SparsePositionalTensor& tensor, int mode) {
  require(mode == 1 || mode == 2, ErrorKind::kInvalidArgument, "partner mode must be 1 or 2");
  if (mode == 1) return {static_cast<Eigen::Index>(tensor.num_users()), true};
  return {static_cast<Eigen::Index>(tensor.num_items()), false};
}

// Calls body(row, partner_row, position, weight) for every entry of users
// [begin, end).
template <class Body>
void for_entries(const data::SparsePositionalTensor& tensor, bool by_user,
                 const Eigen::VectorXd& scaling, std::size_t begin, std::size_t end, Body&& body) {
  for (std::size_t u = begin; u < end; ++u) {
    for (const auto& e : tensor.user_entries(static_cast<std::int32_t>(u))) {
      const Eigen::Index row = by_user ? e.user : e.item;
      const Eigen::Index prow = by_user ? e.item : e.user;
      body(row, prow, static_cast<Eigen::Index>(e.position), scaling(e.item));
    }
  }
}

}  // namespace

Eigen::VectorXd skew_block(const Eigen::MatrixXd& window, const Eigen::MatrixXd& shift,
                           Eigen::Index q) {
  const Eigen::Index r3 = window.cols();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(r3 * shift.cols());
  for (Eigen::Index l = 0; l < window.rows(); ++l) {
    const Eigen::Index s = q - l;
    if (s < 0 || s >= shift.rows()) continue;
    for (Eigen::Index e = 0; e < shift.cols(); ++e) {
      out.segment(e * r3, r3) += shift(s, e) * window.row(l).transpose();
    }
  }
  return out;
}

linalg::ImplicitMatrix partner_kernel_operator(const data::SparsePositionalTensor& tensor, int mode,
                                               std::shared_ptr<const Eigen::VectorXd> scaling,
                                               std::shared_ptr<const Eigen::MatrixXd> partner,
                                               std::shared_ptr<const Eigen::MatrixXd> kernel,
                                               std::size_t chunks) {
  const Roles roles = roles_for(tensor, mode);
  const Eigen::Index rp = partner->cols();
  const Eigen::Index width = kernel->rows();
  const Eigen::Index K = static_cast<Eigen::Index>(tensor.max_length());
  require(kernel->cols() == K, ErrorKind::kInvalidArgument, "kernel length must equal K");
  const data::SparsePositionalTensor* x = &tensor;
  const std::size_t users = tensor.num_users();

  auto apply = [=](const Eigen::MatrixXd& z) {
    const Eigen::Index nb = z.cols();
    // table(:, q * nb + c) = (Z_c * kernel)(:, q) with Z_c the rp x width view.
    Eigen::MatrixXd table(rp, K * nb);
    for (Eigen::Index c = 0; c < nb; ++c) {
      const Eigen::Map<const Eigen::MatrixXd> zc(z.col(c).data(), rp, width);
      const Eigen::MatrixXd t = zc * *kernel;
      for (Eigen::Index q = 0; q < K; ++q) table.col(q * nb + c) = t.col(q);
    }
    return linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(roles.rows, nb),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          for_entries(*x, roles.by_user, *scaling, begin, end,
                      [&](Eigen::Index row, Eigen::Index prow, Eigen::Index q, double w) {
                        acc.row(row).noalias() +=
                            w * partner->row(prow) * table.middleCols(q * nb, nb);
                      });
        });
  };

  auto adjoint = [=](const Eigen::MatrixXd& y) {
    const Eigen::Index nb = y.cols();
    const Eigen::MatrixXd sums = linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(rp, K * nb),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          for_entries(*x, roles.by_user, *scaling, begin, end,
                      [&](Eigen::Index row, Eigen::Index prow, Eigen::Index q, double w) {
                        acc.middleCols(q * nb, nb).noalias() +=
                            (w * partner->row(prow).transpose()) * y.row(row);
                      });
        });
    Eigen::MatrixXd out(rp * width, nb);
    Eigen::MatrixXd gathered(rp, K);
    for (Eigen::Index c = 0; c < nb; ++c) {
      for (Eigen::Index q = 0; q < K; ++q) gathered.col(q) = sums.col(q * nb + c);
      const Eigen::MatrixXd zc = gathered * kernel->transpose();
      out.col(c) = Eigen::Map<const Eigen::VectorXd>(zc.data(), zc.size());
    }
    return out;
  };

  return linalg::ImplicitMatrix(roles.rows, rp * width, apply, adjoint);
}

linalg::ImplicitMatrix partner_skew_operator(const data::SparsePositionalTensor& tensor, int mode,
                                             std::shared_ptr<const Eigen::VectorXd> scaling,
                                             std::shared_ptr<const Eigen::MatrixXd> partner,
                                             std::shared_ptr<const Eigen::MatrixXd> window,
                                             std::shared_ptr<const Eigen::MatrixXd> shift,
                                             std::size_t chunks) {
  const Roles roles = roles_for(tensor, mode);
  const Eigen::Index rp = partner->cols();
  const Eigen::Index width = window->cols() * shift->cols();
  const data::SparsePositionalTensor* x = &tensor;
  const std::size_t users = tensor.num_users();

  auto apply = [=](const Eigen::MatrixXd& z) {
    const Eigen::MatrixXd zt = z.transpose();
    return linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(roles.rows, z.cols()),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          for_entries(*x, roles.by_user, *scaling, begin, end,
                      [&](Eigen::Index row, Eigen::Index prow, Eigen::Index q, double w) {
                        const Eigen::VectorXd block = skew_block(*window, *shift, q);
                        const Eigen::VectorXd p = partner->row(prow).transpose();
                        acc.row(row) += w * linalg::kron_pair_apply(zt, block, p).transpose();
                      });
        });
  };

  auto adjoint = [=](const Eigen::MatrixXd& y) {
    const Eigen::Index nb = y.cols();
    const Eigen::VectorXd flat = linalg::chunked_reduce<Eigen::VectorXd>(
        users, chunks, Eigen::VectorXd::Zero(rp * width * nb),
        [&](Eigen::VectorXd& acc, std::size_t begin, std::size_t end) {
          for_entries(*x, roles.by_user, *scaling, begin, end,
                      [&](Eigen::Index row, Eigen::Index prow, Eigen::Index q, double w) {
                        const Eigen::VectorXd block = skew_block(*window, *shift, q);
                        const Eigen::VectorXd p = partner->row(prow).transpose();
                        const Eigen::VectorXd yr = y.row(row).transpose();
                        linalg::kron_pair_accumulate(acc, block, p, yr, w);
                      });
        });
    // `flat` is the column-major nb x (rp * width) transpose of the result.
    return Eigen::MatrixXd(Eigen::Map<const Eigen::MatrixXd>(flat.data(), nb, rp * width).transpose());
  };

  return linalg::ImplicitMatrix(roles.rows, rp * width, apply, adjoint);
}

}  // namespace seqtf::models::detail
