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

#include "seqtf/models/scaling.hpp"

#include <cmath>
#include <string>

#include "seqtf/attention/positional.hpp"
#include "seqtf/error.hpp"

namespace seqtf::models {

ScalingDiag build_scaling(std::span<const std::int64_t> counts, double exponent) {
  require(std::isfinite(exponent), ErrorKind::kInvalidArgument, "scaling exponent must be finite");
  ScalingDiag scaling;
  scaling.exponent = exponent;
  scaling.weights.resize(static_cast<Eigen::Index>(counts.size()));
  const double power = (exponent - 1.0) / 2.0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    require(counts[j] >= 1, ErrorKind::kData,
            "item " + std::to_string(j) + " has no training interactions");
    scaling.weights(static_cast<Eigen::Index>(j)) =
        power == 0.0 ? 1.0 : std::pow(static_cast<double>(counts[j]), power);
  }
  return scaling;
}

Eigen::VectorXd project_scores(const Eigen::MatrixXd& item_factor, const ScalingDiag& scaling,
                               ProjectorRegime regime, const Eigen::VectorXd& preference) {
  if (regime == ProjectorRegime::kPlain) {
    return item_factor * (item_factor.transpose() * preference);
  }
  const Eigen::VectorXd scaled = scaling.weights.cwiseProduct(preference);
  return (item_factor * (item_factor.transpose() * scaled)).cwiseQuotient(scaling.weights);
}

Eigen::VectorXd positional_preference(std::span<const std::int32_t> history,
                                      const Eigen::VectorXd& position_weights,
                                      std::size_t num_items) {
  const auto encoded =
      attention::encode_history(history, static_cast<std::size_t>(position_weights.size()));
  Eigen::VectorXd preference = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(num_items));
  for (const auto& entry : attention::shift_left(encoded)) {
    preference(entry.item) += position_weights(entry.position);
  }
  return preference;
}

}  // namespace seqtf::models
