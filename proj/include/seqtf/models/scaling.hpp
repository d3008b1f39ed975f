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

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "seqtf/models/recommender.hpp"

namespace seqtf::models {

// Diagonal popularity scaling d_j = count_j^((s - 1) / 2).
struct ScalingDiag {
  Eigen::VectorXd weights;
  double exponent = 1.0;
};

ScalingDiag build_scaling(std::span<const std::int64_t> counts, double exponent);

// V V^T h, or D^-1 V V^T D h in the restored regime.
Eigen::VectorXd project_scores(const Eigen::MatrixXd& item_factor, const ScalingDiag& scaling,
                               ProjectorRegime regime, const Eigen::VectorXd& preference);

// Preference vector h of a history: the history is right-aligned in K
// positions, shifted one step left, and item j receives the weight of its
// shifted positions, summed over repeats. Items pushed out of the window get
// nothing.
Eigen::VectorXd positional_preference(std::span<const std::int32_t> history,
                                      const Eigen::VectorXd& position_weights,
                                      std::size_t num_items);

}  // namespace seqtf::models
