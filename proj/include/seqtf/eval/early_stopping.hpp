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

#include <functional>
#include <memory>
#include <vector>

#include "seqtf/models/recommender.hpp"
#include "seqtf/models/training.hpp"

namespace seqtf::eval {

struct StoppingOptions {
  int patience = 3;
  int max_sweeps = 10;
};

struct StoppingResult {
  std::unique_ptr<models::Recommender> model;  // snapshot at the best sweep
  int best_sweep = 0;                          // 1-based
  double best_metric = 0.0;
  std::vector<double> metrics;  // one per evaluated sweep
};

// Runs sweeps, scoring a snapshot after each. A strictly better score
// becomes the new best; training stops once `patience` consecutive sweeps
// fail to beat it, or at the sweep cap.
StoppingResult early_stopping_train(models::SweepTrainer& trainer,
                                    const std::function<double(const models::Recommender&)>& metric,
                                    const StoppingOptions& options = {});

}  // namespace seqtf::eval
