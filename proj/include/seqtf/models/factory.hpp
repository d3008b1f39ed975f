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

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/models/recommender.hpp"
#include "seqtf/models/training.hpp"

namespace seqtf::models {

// True for the tensor models, which train sweep by sweep.
bool is_iterative(ModelKind kind);

// Builds the positional tensor (K = config.max_length) and popularity
// scaling from `train`, then the trainer of the requested tensor model.
std::unique_ptr<SweepTrainer> make_sweep_trainer(const ModelConfig& config,
                                                 const data::InteractionLog& train,
                                                 const TrainOptions& options = {});

// One-shot training of the baselines (most popular, PureSVD).
std::unique_ptr<Recommender> train_baseline(const ModelConfig& config,
                                            const data::InteractionLog& train,
                                            const TrainOptions& options = {});

// Trains any kind; tensor models run exactly `sweeps` sweeps (at least one).
std::unique_ptr<Recommender> train_model(const ModelConfig& config,
                                         const data::InteractionLog& train, int sweeps,
                                         const TrainOptions& options = {});

}  // namespace seqtf::models
