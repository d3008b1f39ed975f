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

#include "seqtf/models/ga_satf.hpp"

#include <string>

#include "seqtf/error.hpp"
#include "seqtf/linalg/random.hpp"

namespace seqtf::models {
namespace {

void check_ranks(const data::SparsePositionalTensor& x, const TuckerRanks& r) {
  const std::size_t M = x.num_users(), N = x.num_items(), K = x.max_length();
  const bool ok = r.user >= 1 && r.item >= 1 && r.window >= 1 &&
                  r.user <= std::min(M, r.item * r.window) &&
                  r.item <= std::min(N, r.user * r.window) &&
                  r.window <= std::min(K, r.user * r.item);
  require(ok, ErrorKind::kInvalidArgument,
          "infeasible ranks (" + std::to_string(r.user) + ", " + std::to_string(r.item) + ", " +
              std::to_string(r.window) + ") for a " + std::to_string(M) + " x " +
              std::to_string(N) + " x " + std::to_string(K) + " tensor");
}

}  // namespace

GaSatfModel::GaSatfModel(ModelConfig config, std::vector<std::string> item_ids,
                         Eigen::MatrixXd item_factor, Eigen::MatrixXd position_factor,
                         ScalingDiag scaling)
    : Recommender(std::move(config), std::move(item_ids)),
      item_factor_(std::move(item_factor)),
      position_factor_(std::move(position_factor)),
      attention_(attention::AttentionMatrix::build(this->config().max_length,
                                                   this->config().decay,
                                                   this->config().attention)),
      scaling_(std::move(scaling)) {
  require(item_factor_.rows() == static_cast<Eigen::Index>(num_items()) &&
              scaling_.weights.size() == item_factor_.rows(),
          ErrorKind::kInvalidArgument, "item factor does not match the catalog");
  require(position_factor_.rows() == static_cast<Eigen::Index>(attention_.size()) &&
              position_factor_.cols() >= 1,
          ErrorKind::kInvalidArgument, "positional factor must have K rows");
  restored_ = attention::triangular_restore(attention_, position_factor_);
  position_weights_ = attention_.apply(Eigen::MatrixXd(position_factor_)) *
                      restored_.row(restored_.rows() - 1).transpose();
}

Eigen::VectorXd GaSatfModel::score(std::span<const std::int32_t> history) const {
  const Eigen::VectorXd preference = positional_preference(history, position_weights_, num_items());
  return project_scores(item_factor_, scaling_, config().regime, preference);
}

GaSatfTrainer::GaSatfTrainer(data::SparsePositionalTensor tensor, std::vector<std::string> item_ids,
                             ScalingDiag scaling, ModelConfig config, TrainOptions options)
    : tensor_(std::move(tensor)),
      item_ids_(std::move(item_ids)),
      scaling_(std::move(scaling)),
      config_(std::move(config)),
      options_(options),
      attention_(attention::AttentionMatrix::build(tensor_.max_length(), config_.decay,
                                                   config_.attention)) {
  require(item_ids_.size() == tensor_.num_items() &&
              scaling_.weights.size() == static_cast<Eigen::Index>(tensor_.num_items()),
          ErrorKind::kInvalidArgument, "catalog does not match the tensor");
  check_ranks(tensor_, config_.ranks);
  config_.kind = ModelKind::kGaSatf;
  config_.max_length = tensor_.max_length();
  factors_.item = linalg::random_orthonormal(tensor_.num_items(), config_.ranks.item,
                                             linalg::mix_seed(config_.seed, 2));
  position_ = linalg::random_orthonormal(tensor_.max_length(), config_.ranks.window,
                                         linalg::mix_seed(config_.seed, 3));
  factors_.attended = attention_.apply(position_);
}

void GaSatfTrainer::sweep() {
  const std::uint64_t base = linalg::mix_seed(config_.seed, 1000 + static_cast<std::uint64_t>(sweeps_));
  const auto& ops = options_.operators;
  const Eigen::MatrixXd* warm_user = factors_.user.size() > 0 ? &factors_.user : nullptr;

  auto u = leading_subspace(ga_mode_operator(tensor_, scaling_.weights, attention_, factors_, 1, ops),
                            config_.ranks.user, options_, linalg::mix_seed(base, 1), warm_user);
  factors_.user = std::move(u.left);

  const Eigen::MatrixXd previous_item = factors_.item;
  auto v = leading_subspace(ga_mode_operator(tensor_, scaling_.weights, attention_, factors_, 2, ops),
                            config_.ranks.item, options_, linalg::mix_seed(base, 2), &previous_item);
  factors_.item = std::move(v.left);

  const Eigen::MatrixXd previous_position = position_;
  auto w = leading_subspace(ga_mode_operator(tensor_, scaling_.weights, attention_, factors_, 3, ops),
                            config_.ranks.window, options_, linalg::mix_seed(base, 3),
                            &previous_position);
  position_ = std::move(w.left);
  factors_.attended = attention_.apply(position_);
  fit_ = w.singular_values.squaredNorm();
  ++sweeps_;
}

std::unique_ptr<GaSatfModel> GaSatfTrainer::model() const {
  return std::make_unique<GaSatfModel>(config_, item_ids_, factors_.item, position_, scaling_);
}

std::unique_ptr<Recommender> GaSatfTrainer::snapshot() const { return model(); }

}  // namespace seqtf::models
