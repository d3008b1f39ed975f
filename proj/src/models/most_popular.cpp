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

#include "seqtf/models/most_popular.hpp"

#include "seqtf/error.hpp"

namespace seqtf::models {

MostPopularModel::MostPopularModel(ModelConfig config, std::vector<std::string> item_ids,
                                   std::vector<std::int64_t> counts)
    : Recommender(std::move(config), std::move(item_ids)), counts_(std::move(counts)) {
  require(counts_.size() == num_items(), ErrorKind::kInvalidArgument,
          "popularity counts do not match the catalog");
}

std::vector<std::int32_t> MostPopularModel::ranking() const {
  Eigen::VectorXd scores(static_cast<Eigen::Index>(counts_.size()));
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    scores(static_cast<Eigen::Index>(j)) = static_cast<double>(counts_[j]);
  }
  return top_n(scores, counts_.size());
}

Eigen::VectorXd MostPopularModel::score(std::span<const std::int32_t>) const {
  Eigen::VectorXd scores(static_cast<Eigen::Index>(counts_.size()));
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    scores(static_cast<Eigen::Index>(j)) = static_cast<double>(counts_[j]);
  }
  return scores;
}

MostPopularModel train_mp(const data::InteractionLog& train) {
  require(!train.empty(), ErrorKind::kData, "cannot train on an empty log");
  ModelConfig config;
  config.kind = ModelKind::kMostPopular;
  return MostPopularModel(config, train.item_ids(), train.item_counts());
}

}  // namespace seqtf::models
