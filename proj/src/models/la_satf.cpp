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

#include "seqtf/models/la_satf.hpp"

#include <string>

#include "seqtf/error.hpp"
#include "seqtf/linalg/convolution.hpp"
#include "seqtf/linalg/random.hpp"

namespace seqtf::models {
namespace {

void check_window(std::size_t length, std::size_t window) {
  require(window >= 1 && window <= length, ErrorKind::kInvalidArgument,
          "window K_L=" + std::to_string(window) + " must lie in [1, K=" + std::to_string(length) +
              "]");
}

void check_ranks(const data::SparsePositionalTensor& x, std::size_t window, const TuckerRanks& r) {
  const std::size_t M = x.num_users(), N = x.num_items();
  const std::size_t KS = x.max_length() - window + 1;
  const bool ok = r.user >= 1 && r.item >= 1 && r.window >= 1 && r.shift >= 1 &&
                  r.user <= std::min(M, r.item * r.window * r.shift) &&
                  r.item <= std::min(N, r.user * r.window * r.shift) &&
                  r.window <= std::min(window, r.user * r.item * r.shift) &&
                  r.shift <= std::min(KS, r.user * r.item * r.window);
  require(ok, ErrorKind::kInvalidArgument,
          "infeasible ranks (" + std::to_string(r.user) + ", " + std::to_string(r.item) + ", " +
              std::to_string(r.window) + ", " + std::to_string(r.shift) + ") for M=" +
              std::to_string(M) + ", N=" + std::to_string(N) + ", K_L=" + std::to_string(window) +
              ", K_S=" + std::to_string(KS));
}

}  // namespace

LaSatfModel::LaSatfModel(ModelConfig config, std::vector<std::string> item_ids,
                         Eigen::MatrixXd item_factor, Eigen::MatrixXd window_factor,
                         Eigen::MatrixXd shift_factor, ScalingDiag scaling)
    : Recommender(std::move(config), std::move(item_ids)),
      item_factor_(std::move(item_factor)),
      window_factor_(std::move(window_factor)),
      shift_factor_(std::move(shift_factor)),
      attention_(attention::AttentionMatrix::build(this->config().window, this->config().decay,
                                                   this->config().attention)),
      scaling_(std::move(scaling)) {
  check_window(this->config().max_length, this->config().window);
  require(item_factor_.rows() == static_cast<Eigen::Index>(num_items()) &&
              scaling_.weights.size() == item_factor_.rows(),
          ErrorKind::kInvalidArgument, "item factor does not match the catalog");
  require(window_factor_.rows() == static_cast<Eigen::Index>(this->config().window) &&
              shift_factor_.rows() ==
                  static_cast<Eigen::Index>(this->config().max_length - this->config().window + 1),
          ErrorKind::kInvalidArgument, "positional factors must have K_L and K_S rows");
  restored_ = attention::triangular_restore(attention_, window_factor_);
  const Eigen::VectorXd window_weights = attention_.apply(Eigen::MatrixXd(window_factor_)) *
                                         restored_.row(restored_.rows() - 1).transpose();
  const Eigen::VectorXd shift_weights =
      shift_factor_ * shift_factor_.row(shift_factor_.rows() - 1).transpose();
  position_weights_ = linalg::convolve_columns(window_weights, shift_weights).col(0);
}

Eigen::VectorXd LaSatfModel::score(std::span<const std::int32_t> history) const {
  const Eigen::VectorXd preference = positional_preference(history, position_weights_, num_items());
  return project_scores(item_factor_, scaling_, config().regime, preference);
}

LaSatfTrainer::LaSatfTrainer(data::SparsePositionalTensor tensor, std::vector<std::string> item_ids,
                             ScalingDiag scaling, ModelConfig config, TrainOptions options)
    : tensor_(std::move(tensor)),
      item_ids_(std::move(item_ids)),
      scaling_(std::move(scaling)),
      config_(std::move(config)),
      options_(options),
      attention_(attention::AttentionMatrix::build(
          (check_window(tensor_.max_length(), config_.window), config_.window), config_.decay,
          config_.attention)) {
  require(item_ids_.size() == tensor_.num_items() &&
              scaling_.weights.size() == static_cast<Eigen::Index>(tensor_.num_items()),
          ErrorKind::kInvalidArgument, "catalog does not match the tensor");
  check_ranks(tensor_, config_.window, config_.ranks);
  config_.kind = ModelKind::kLaSatf;
  config_.max_length = tensor_.max_length();
  const std::size_t shift_len = tensor_.max_length() - config_.window + 1;
  factors_.item = linalg::random_orthonormal(tensor_.num_items(), config_.ranks.item,
                                             linalg::mix_seed(config_.seed, 2));
  window_ = linalg::random_orthonormal(config_.window, config_.ranks.window,
                                       linalg::mix_seed(config_.seed, 3));
  factors_.shift = linalg::random_orthonormal(shift_len, config_.ranks.shift,
                                              linalg::mix_seed(config_.seed, 4));
  factors_.attended = attention_.apply(window_);
  rebuild_cache();
}

void LaSatfTrainer::rebuild_cache() {
  cache_ = linalg::SkewBlockCache::build(factors_.attended, factors_.shift, options_.operators.path,
                                         options_.operators.fft_threshold);
}

void LaSatfTrainer::sweep() {
  const std::uint64_t base = linalg::mix_seed(config_.seed, 1000 + static_cast<std::uint64_t>(sweeps_));
  const auto& ops = options_.operators;
  const auto op = [&](int mode) {
    return la_mode_operator(tensor_, scaling_.weights, attention_, factors_, &cache_, mode, ops);
  };
  const Eigen::MatrixXd* warm_user = factors_.user.size() > 0 ? &factors_.user : nullptr;

  auto u = leading_subspace(op(1), config_.ranks.user, options_, linalg::mix_seed(base, 1), warm_user);
  factors_.user = std::move(u.left);

  const Eigen::MatrixXd previous_item = factors_.item;
  auto v = leading_subspace(op(2), config_.ranks.item, options_, linalg::mix_seed(base, 2),
                            &previous_item);
  factors_.item = std::move(v.left);

  const Eigen::MatrixXd previous_window = window_;
  auto w = leading_subspace(op(3), config_.ranks.window, options_, linalg::mix_seed(base, 3),
                            &previous_window);
  window_ = std::move(w.left);
  factors_.attended = attention_.apply(window_);
  rebuild_cache();

  const Eigen::MatrixXd previous_shift = factors_.shift;
  auto s = leading_subspace(op(4), config_.ranks.shift, options_, linalg::mix_seed(base, 4),
                            &previous_shift);
  factors_.shift = std::move(s.left);
  rebuild_cache();
  fit_ = s.singular_values.squaredNorm();
  ++sweeps_;
}

std::unique_ptr<LaSatfModel> LaSatfTrainer::model() const {
  return std::make_unique<LaSatfModel>(config_, item_ids_, factors_.item, window_, factors_.shift,
                                       scaling_);
}

std::unique_ptr<Recommender> LaSatfTrainer::snapshot() const { return model(); }

}  // namespace seqtf::models
