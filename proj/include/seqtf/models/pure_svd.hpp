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

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/linalg/implicit_matrix.hpp"
#include "seqtf/models/scaling.hpp"
#include "seqtf/models/training.hpp"

namespace seqtf::models {

class PureSvdModel : public Recommender {
 public:
  PureSvdModel(ModelConfig config, std::vector<std::string> item_ids, Eigen::MatrixXd item_factor,
               ScalingDiag scaling);

  const Eigen::MatrixXd& item_factor() const { return item_factor_; }
  const ScalingDiag& scaling() const { return scaling_; }

  Eigen::VectorXd score(std::span<const std::int32_t> history) const override;

 private:
  Eigen::MatrixXd item_factor_;
  ScalingDiag scaling_;
};

// (X D)^T as an N x M operator over the binary user-item matrix of `log`.
linalg::ImplicitMatrix scaled_interactions_transposed(const data::InteractionLog& log,
                                                      const ScalingDiag& scaling);

// Uses config.rank, config.scaling, config.regime and config.seed.
PureSvdModel train_puresvd(const data::InteractionLog& train, const ModelConfig& config,
                           const TrainOptions& options = {});

}  // namespace seqtf::models
