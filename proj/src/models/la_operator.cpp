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

#include "seqtf/models/la_operator.hpp"

#include <memory>
#include <optional>

#include "mode_kernels.hpp"
#include "seqtf/error.hpp"
#include "seqtf/linalg/convolution.hpp"
#include "seqtf/linalg/parallel.hpp"

namespace seqtf::models {
namespace {

void check_shapes(const data::SparsePositionalTensor& tensor, const Eigen::VectorXd& scaling,
                  const attention::AttentionMatrix& attention, const LaFactors& f, int mode) {
  require(mode >= 1 && mode <= 4, ErrorKind::kInvalidArgument, "local model has modes 1..4");
  const auto M = static_cast<Eigen::Index>(tensor.num_users());
  const auto N = static_cast<Eigen::Index>(tensor.num_items());
  const auto K = static_cast<Eigen::Index>(tensor.max_length());
  require(scaling.size() == N, ErrorKind::kInvalidArgument, "scaling length must equal N");
  const auto KL = static_cast<Eigen::Index>(attention.size());
  require(KL >= 1 && KL <= K, ErrorKind::kInvalidArgument, "window size must lie in [1, K]");
  if (mode != 1) {
    require(f.user.rows() == M, ErrorKind::kInvalidArgument, "user factor must have M rows");
  }
  if (mode != 2) {
    require(f.item.rows() == N, ErrorKind::kInvalidArgument, "item factor must have N rows");
  }
  if (mode != 3) {
    require(f.attended.rows() == KL, ErrorKind::kInvalidArgument,
            "window factor must have K_L rows");
  }
  if (mode != 4) {
    require(f.shift.rows() == K - KL + 1, ErrorKind::kInvalidArgument,
            "shift factor must have K - K_L + 1 rows");
  }
}

// Modes 3 and 4 share one shape: the output lives on one virtual axis and
// the other virtual axis is contracted with `other` (K_other x r_other)
// along the skew diagonal of each entry. Mode 3 additionally carries the
// window attention.
linalg::ImplicitMatrix virtual_operator(const data::SparsePositionalTensor& tensor,
                                        const Eigen::VectorXd& scaling, const LaFactors& f,
                                        const Eigen::MatrixXd& other_factor,
                                        std::optional<attention::AttentionMatrix> attention,
                                        const OperatorOptions& options) {
  auto user = std::make_shared<const Eigen::MatrixXd>(f.user);
  auto item_scaled = std::make_shared<const Eigen::MatrixXd>(scaling.asDiagonal() * f.item);
  auto other = std::make_shared<const Eigen::MatrixXd>(other_factor);
  auto attn = attention ? std::make_shared<const attention::AttentionMatrix>(*attention) : nullptr;
  const data::SparsePositionalTensor* x = &tensor;
  const Eigen::Index r1 = f.user.cols();
  const Eigen::Index r2 = f.item.cols();
  const Eigen::Index ro = other_factor.cols();
  const auto K = static_cast<Eigen::Index>(tensor.max_length());
  const Eigen::Index out_len = K - other_factor.rows() + 1;
  const std::size_t users = tensor.num_users();
  const std::size_t chunks = options.chunks();
  const bool cached = options.use_cache;
  const auto path = options.path;
  const auto threshold = options.fft_threshold;

  auto apply = [=](const Eigen::MatrixXd& z) {
    const Eigen::Index nb = z.cols();
    const Eigen::Map<const Eigen::MatrixXd> zall(z.data(), r1, r2 * ro * nb);
    // Cached: acc(q, e + ro c) sums the contracted vectors of entries at q.
    // Direct: acc(l, c) receives each entry's skew-diagonal expansion.
    const Eigen::Index acc_rows = cached ? K : out_len;
    const Eigen::Index acc_cols = cached ? ro * nb : nb;
    const Eigen::MatrixXd acc_total = linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(acc_rows, acc_cols),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          Eigen::RowVectorXd g(r2 * ro * nb);
          for (std::size_t u = begin; u < end; ++u) {
            const auto entries = x->user_entries(static_cast<std::int32_t>(u));
            if (entries.empty()) continue;
            g.noalias() = user->row(static_cast<Eigen::Index>(u)) * zall;
            const Eigen::Map<const Eigen::MatrixXd> gi(g.data(), r2, ro * nb);
            for (const auto& e : entries) {
              const Eigen::RowVectorXd h = item_scaled->row(e.item) * gi;  // (e + ro c)
              if (cached) {
                acc.row(e.position) += h;
                continue;
              }
              for (Eigen::Index l = 0; l < out_len; ++l) {
                const Eigen::Index s = e.position - l;
                if (s < 0 || s >= other->rows()) continue;
                for (Eigen::Index c = 0; c < nb; ++c) {
                  acc(l, c) += other->row(s).dot(h.segment(c * ro, ro));
                }
              }
            }
          }
        });
    Eigen::MatrixXd t(out_len, nb);
    if (cached) {
      for (Eigen::Index c = 0; c < nb; ++c) {
        t.col(c) = linalg::correlate_columns(acc_total.middleCols(c * ro, ro), *other, path,
                                             threshold);
      }
    } else {
      t = acc_total;
    }
    return attn ? attn->apply_transpose(t) : t;
  };

  auto adjoint = [=](const Eigen::MatrixXd& y) {
    const Eigen::Index nb = y.cols();
    const Eigen::MatrixXd ya = attn ? attn->apply(y) : y;
    // spread(q, e + ro c) = sum over l + s = q of ya(l, c) other(s, e).
    Eigen::MatrixXd spread;
    if (cached) {
      const Eigen::MatrixXd conv = linalg::convolve_columns(ya, *other, path, threshold);
      spread.resize(K, ro * nb);
      for (Eigen::Index e = 0; e < ro; ++e) {
        for (Eigen::Index c = 0; c < nb; ++c) spread.col(e + ro * c) = conv.col(c + nb * e);
      }
    }
    const Eigen::MatrixXd out = linalg::chunked_reduce<Eigen::MatrixXd>(
        users, chunks, Eigen::MatrixXd::Zero(r1, r2 * ro * nb),
        [&](Eigen::MatrixXd& acc, std::size_t begin, std::size_t end) {
          Eigen::MatrixXd mi(r2, ro * nb);
          Eigen::RowVectorXd h(ro * nb);
          for (std::size_t u = begin; u < end; ++u) {
            const auto entries = x->user_entries(static_cast<std::int32_t>(u));
            if (entries.empty()) continue;
            mi.setZero();
            for (const auto& e : entries) {
              if (cached) {
                h = spread.row(e.position);
              } else {
                h.setZero();
                for (Eigen::Index l = 0; l < ya.rows(); ++l) {
                  const Eigen::Index s = e.position - l;
                  if (s < 0 || s >= other->rows()) continue;
                  for (Eigen::Index c = 0; c < nb; ++c) {
                    h.segment(c * ro, ro) += ya(l, c) * other->row(s);
                  }
                }
              }
              mi.noalias() += item_scaled->row(e.item).transpose() * h;
            }
            acc.noalias() += user->row(static_cast<Eigen::Index>(u)).transpose() *
                             Eigen::Map<const Eigen::RowVectorXd>(mi.data(), mi.size());
          }
        });
    return Eigen::MatrixXd(Eigen::Map<const Eigen::MatrixXd>(out.data(), r1 * r2 * ro, nb));
  };

  return linalg::ImplicitMatrix(out_len, r1 * r2 * ro, apply, adjoint);
}

}  // namespace

linalg::ImplicitMatrix la_mode_operator(const data::SparsePositionalTensor& tensor,
                                        const Eigen::VectorXd& scaling,
                                        const attention::AttentionMatrix& window_attention,
                                        const LaFactors& factors,
                                        const linalg::SkewBlockCache* cache, int mode,
                                        const OperatorOptions& options) {
  check_shapes(tensor, scaling, window_attention, factors, mode);
  if (mode == 3) {
    return virtual_operator(tensor, scaling, factors, factors.shift, window_attention, options);
  }
  if (mode == 4) {
    return virtual_operator(tensor, scaling, factors, factors.attended, std::nullopt, options);
  }
  auto weights = std::make_shared<const Eigen::VectorXd>(scaling);
  auto partner = std::make_shared<const Eigen::MatrixXd>(mode == 1 ? factors.item : factors.user);
  if (!options.use_cache) {
    return detail::partner_skew_operator(
        tensor, mode, weights, partner, std::make_shared<const Eigen::MatrixXd>(factors.attended),
        std::make_shared<const Eigen::MatrixXd>(factors.shift), options.chunks());
  }
  require(cache != nullptr, ErrorKind::kInvalidArgument, "cached operator needs a skew block cache");
  require(cache->fingerprint() == linalg::factor_fingerprint(factors.attended, factors.shift),
          ErrorKind::kInvalidArgument, "stale skew block cache: factors changed since it was built");
  require(cache->length() == tensor.max_length(), ErrorKind::kInvalidArgument,
          "skew block cache length must equal K");
  auto kernel = std::make_shared<const Eigen::MatrixXd>(cache->stacked());
  return detail::partner_kernel_operator(tensor, mode, weights, partner, kernel, options.chunks());
}

}  // namespace seqtf::models
