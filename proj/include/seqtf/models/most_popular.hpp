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
#include <vector>

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/models/recommender.hpp"

namespace seqtf::models {

class MostPopularModel : public Recommender {
 public:
  MostPopularModel(ModelConfig config, std::vector<std::string> item_ids,
                   std::vector<std::int64_t> counts);

  const std::vector<std::int64_t>& counts() const { return counts_; }
  // Items by descending count, ties by ascending index.
  std::vector<std::int32_t> ranking() const;

  Eigen::VectorXd score(std::span<const std::int32_t> history) const override;

 private:
  std::vector<std::int64_t> counts_;
};

MostPopularModel train_mp(const data::InteractionLog& train);

}  // namespace seqtf::models
