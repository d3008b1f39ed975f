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

#include <memory>
#include <string>
#include <vector>

#include "seqtf/attention/attention_matrix.hpp"
#include "seqtf/data/positional_tensor.hpp"
#include "seqtf/models/ga_operator.hpp"
#include "seqtf/models/scaling.hpp"
#include "seqtf/models/training.hpp"

namespace seqtf::models {

class GaSatfModel : public Recommender {
 public:
  // `position_factor` is W from the attended space; the restored factor is
  // derived here.
  GaSatfModel(ModelConfig config, std::vector<std::string> item_ids, Eigen::MatrixXd item_factor,
              Eigen::MatrixXd position_factor, ScalingDiag scaling);

  const Eigen::MatrixXd& item_factor() const { return item_factor_; }
  const Eigen::MatrixXd& position_factor() const { return position_factor_; }
  const Eigen::MatrixXd& restored_position_factor() const { return restored_; }
  const attention::AttentionMatrix& attention() const { return attention_; }
  const ScalingDiag& scaling() const { return scaling_; }

  // Weight of each position for the next step: A W times the last row of
  // the restored factor.
  const Eigen::VectorXd& position_weights() const { return position_weights_; }

  Eigen::VectorXd score(std::span<const std::int32_t> history) const override;

 private:
  Eigen::MatrixXd item_factor_;
  Eigen::MatrixXd position_factor_;
  attention::AttentionMatrix attention_;
  Eigen::MatrixXd restored_;
  ScalingDiag scaling_;
  Eigen::VectorXd position_weights_;
};

class GaSatfTrainer : public SweepTrainer {
 public:
  // Uses config.ranks (user, item, window), config.decay, config.attention,
  // config.regime and config.seed. K is the tensor's length.
  GaSatfTrainer(data::SparsePositionalTensor tensor, std::vector<std::string> item_ids,
                ScalingDiag scaling, ModelConfig config, TrainOptions options = {});

  void sweep() override;
  int sweeps_done() const override { return sweeps_; }
  double fit() const override { return fit_; }
  std::unique_ptr<Recommender> snapshot() const override;
  std::unique_ptr<GaSatfModel> model() const;

  const data::SparsePositionalTensor& tensor() const { return tensor_; }
  const attention::AttentionMatrix& attention() const { return attention_; }
  const ScalingDiag& scaling() const { return scaling_; }
  // Current U (empty before the first sweep), V, W and W_A = A W.
  const GaFactors& factors() const { return factors_; }
  const Eigen::MatrixXd& position_factor() const { return position_; }

 private:
  data::SparsePositionalTensor tensor_;
  std::vector<std::string> item_ids_;
  ScalingDiag scaling_;
  ModelConfig config_;
  TrainOptions options_;
  attention::AttentionMatrix attention_;
  GaFactors factors_;
  Eigen::MatrixXd position_;
  int sweeps_ = 0;
  double fit_ = 0.0;
};

}  // namespace seqtf::models
