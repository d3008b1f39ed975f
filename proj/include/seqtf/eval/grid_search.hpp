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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/eval/early_stopping.hpp"
#include "seqtf/eval/evaluate.hpp"
#include "seqtf/models/recommender.hpp"
#include "seqtf/models/training.hpp"

namespace seqtf::eval {

// Value lists per hyperparameter. Lists that do not apply to base.kind are
// ignored. The enumeration nests, outermost first: window, rank / user rank,
// item rank, window rank, shift rank, decay, scaling, regime.
struct GridSpace {
  models::ModelConfig base;  // kind, K, attention mode and seed
  std::vector<std::size_t> svd_ranks;
  std::vector<std::size_t> user_ranks;
  std::vector<std::size_t> item_ranks;  // empty: item rank follows the user rank
  std::vector<std::size_t> window_ranks;
  std::vector<std::size_t> shift_ranks;
  std::vector<std::size_t> windows;
  std::vector<double> decays{0.0};
  std::vector<double> scalings{1.0};
  std::vector<models::ProjectorRegime> regimes{models::ProjectorRegime::kPlain};
  std::size_t budget = 200;
};

// Every point of the space passing the constraints, in enumeration order.
// The local model requires r3 < K_L and r4 < K_S; all tensor models need
// each rank to fit its unfolding; PureSVD needs rank <= min(M, N).
std::vector<models::ModelConfig> enumerate_grid(const GridSpace& space, std::size_t num_users,
                                                std::size_t num_items);

// Up to `budget` distinct indices of [0, total), drawn uniformly without
// replacement when total exceeds the budget, returned ascending.
std::vector<std::size_t> sample_points(std::size_t total, std::size_t budget, std::uint64_t seed);

struct GridPoint {
  std::size_t index = 0;  // position in the enumeration
  models::ModelConfig config;
  EvaluationReport report;  // validation report of the chosen snapshot
  int sweep_count = 0;      // 0 for one-shot baselines
  std::vector<double> metric_history;
  double wall_time = 0.0;  // seconds
};

struct GridOptions {
  std::size_t cutoff = 10;
  StoppingOptions stopping;
  models::TrainOptions training;
  std::size_t threads = 1;  // grid points trained concurrently
};

struct GridResult {
  std::vector<GridPoint> log;  // evaluated points in enumeration order
  std::size_t best = 0;        // index into log
  std::unique_ptr<models::Recommender> best_model;
};

// Trains every selected point on `train` (tensor models with early stopping
// on validation NDCG), and picks the highest validation NDCG; ties go to the
// lower total rank, then to the earlier point.
GridResult grid_search(const GridSpace& space, const data::InteractionLog& train,
                       const data::InteractionLog& validation, std::uint64_t seed,
                       const GridOptions& options = {});

}  // namespace seqtf::eval
