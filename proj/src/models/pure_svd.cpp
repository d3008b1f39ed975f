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

#include "seqtf/models/pure_svd.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "seqtf/error.hpp"
#include "seqtf/linalg/random.hpp"

namespace seqtf::models {

PureSvdModel::PureSvdModel(ModelConfig config, std::vector<std::string> item_ids,
                           Eigen::MatrixXd item_factor, ScalingDiag scaling)
    : Recommender(std::move(config), std::move(item_ids)),
      item_factor_(std::move(item_factor)),
      scaling_(std::move(scaling)) {
  require(item_factor_.rows() == static_cast<Eigen::Index>(num_items()) &&
              scaling_.weights.size() == item_factor_.rows(),
          ErrorKind::kInvalidArgument, "PureSVD factors do not match the catalog");
}

Eigen::VectorXd PureSvdModel::score(std::span<const std::int32_t> history) const {
  Eigen::VectorXd preference = Eigen::VectorXd::Zero(item_factor_.rows());
  for (const std::int32_t item : history) preference(item) = 1.0;
  return project_scores(item_factor_, scaling_, config().regime, preference);
}

linalg::ImplicitMatrix scaled_interactions_transposed(const data::InteractionLog& log,
                                                      const ScalingDiag& scaling) {
  auto rows = std::make_shared<std::vector<data::Interaction>>(log.interactions());
  auto weights = std::make_shared<Eigen::VectorXd>(scaling.weights);
  const auto n_items = static_cast<Eigen::Index>(log.num_items());
  const auto n_users = static_cast<Eigen::Index>(log.num_users());
  require(weights->size() == n_items, ErrorKind::kInvalidArgument,
          "scaling does not match the catalog");
  auto apply = [rows, weights, n_items](const Eigen::MatrixXd& x) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_items, x.cols());
    for (const auto& r : *rows) out.row(r.item) += (*weights)(r.item) * x.row(r.user);
    return out;
  };
  auto adjoint = [rows, weights, n_users](const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_users, y.cols());
    for (const auto& r : *rows) out.row(r.user) += (*weights)(r.item) * y.row(r.item);
    return out;
  };
  return linalg::ImplicitMatrix(n_items, n_users, apply, adjoint);
}

PureSvdModel train_puresvd(const data::InteractionLog& train, const ModelConfig& config,
                           const TrainOptions& options) {
  require(!train.empty(), ErrorKind::kData, "cannot train on an empty log");
  const std::size_t limit = std::min(train.num_users(), train.num_items());
  require(config.rank >= 1 && config.rank <= limit, ErrorKind::kInvalidArgument,
          "PureSVD rank " + std::to_string(config.rank) + " infeasible (limit " +
              std::to_string(limit) + ")");
  ScalingDiag scaling = build_scaling(train.item_counts(), config.scaling);
  const auto op = scaled_interactions_transposed(train, scaling);
  auto svd = leading_subspace(op, config.rank, options, linalg::mix_seed(config.seed, 1));
  ModelConfig stored = config;
  stored.kind = ModelKind::kPureSvd;
  return PureSvdModel(stored, train.item_ids(), std::move(svd.left), std::move(scaling));
}

}  // namespace seqtf::models
