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
#include <optional>
#include <vector>

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/eval/metrics.hpp"
#include "seqtf/models/recommender.hpp"

namespace seqtf::eval {

struct EvaluationReport {
  MetricSummary hr;
  MetricSummary ndcg;
  double cov = 0.0;
  std::size_t cutoff = 10;
  std::size_t evaluated_count = 0;
  std::size_t skipped_cold_count = 0;
  // History items unknown to the model, summed over all calls.
  std::size_t dropped_unknown = 0;
};

// Outcome of one test interaction, in evaluation order.
struct StepOutcome {
  std::size_t test_index = 0;  // index into test.interactions()
  bool evaluated = false;
  std::optional<std::size_t> rank;  // 1-based rank of the hidden item
  std::vector<std::int32_t> recommended;
};

struct EvaluateOptions {
  std::size_t threads = 1;
  // Receives every step when set.
  std::vector<StepOutcome>* trace = nullptr;
};

// Walks the test interactions in time order. Each step scores the user's
// training items plus their earlier test items, excluding seen items, and
// records where the hidden item lands. Steps whose target is unknown to the
// model or whose history is empty are skipped and counted as cold.
EvaluationReport evaluate(const models::Recommender& model, const data::InteractionLog& train,
                          const data::InteractionLog& test, std::size_t cutoff,
                          const EvaluateOptions& options = {});

}  // namespace seqtf::eval
