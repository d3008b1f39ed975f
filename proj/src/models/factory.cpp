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

#include "seqtf/models/factory.hpp"

#include <algorithm>

#include "seqtf/data/positional_tensor.hpp"
#include "seqtf/error.hpp"
#include "seqtf/models/ga_satf.hpp"
#include "seqtf/models/la_satf.hpp"
#include "seqtf/models/most_popular.hpp"
#include "seqtf/models/pure_svd.hpp"

namespace seqtf::models {

bool is_iterative(ModelKind kind) {
  return kind == ModelKind::kGaSatf || kind == ModelKind::kLaSatf;
}

std::unique_ptr<SweepTrainer> make_sweep_trainer(const ModelConfig& config,
                                                 const data::InteractionLog& train,
                                                 const TrainOptions& options) {
  require(is_iterative(config.kind), ErrorKind::kInvalidArgument,
          std::string(model_kind_name(config.kind)) + " is not trained by sweeps");
  require(!train.empty(), ErrorKind::kData, "cannot train on an empty log");
  auto tensor = data::build_positional_tensor(train, config.max_length);
  auto scaling = build_scaling(train.item_counts(), config.scaling);
  if (config.kind == ModelKind::kGaSatf) {
    return std::make_unique<GaSatfTrainer>(std::move(tensor), train.item_ids(), std::move(scaling),
                                           config, options);
  }
  return std::make_unique<LaSatfTrainer>(std::move(tensor), train.item_ids(), std::move(scaling),
                                         config, options);
}

std::unique_ptr<Recommender> train_baseline(const ModelConfig& config,
                                            const data::InteractionLog& train,
                                            const TrainOptions& options) {
  switch (config.kind) {
    case ModelKind::kMostPopular: {
      auto model = train_mp(train);
      return std::make_unique<MostPopularModel>(std::move(model));
    }
    case ModelKind::kPureSvd:
      return std::make_unique<PureSvdModel>(train_puresvd(train, config, options));
    default:
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(model_kind_name(config.kind)) + " is not a one-shot baseline");
  }
}

std::unique_ptr<Recommender> train_model(const ModelConfig& config,
                                         const data::InteractionLog& train, int sweeps,
                                         const TrainOptions& options) {
  if (!is_iterative(config.kind)) return train_baseline(config, train, options);
  auto trainer = make_sweep_trainer(config, train, options);
  for (int s = 0; s < std::max(sweeps, 1); ++s) trainer->sweep();
  return trainer->snapshot();
}

}  // namespace seqtf::models
