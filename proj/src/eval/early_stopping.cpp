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

#include "seqtf/eval/early_stopping.hpp"

#include "seqtf/error.hpp"

namespace seqtf::eval {

StoppingResult early_stopping_train(models::SweepTrainer& trainer,
                                    const std::function<double(const models::Recommender&)>& metric,
                                    const StoppingOptions& options) {
  require(options.patience >= 1 && options.max_sweeps >= 1, ErrorKind::kInvalidArgument,
          "patience and sweep cap must be at least 1");
  StoppingResult result;
  int stale = 0;
  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    trainer.sweep();
    auto snapshot = trainer.snapshot();
    const double value = metric(*snapshot);
    result.metrics.push_back(value);
    if (!result.model || value > result.best_metric) {
      result.model = std::move(snapshot);
      result.best_metric = value;
      result.best_sweep = sweep;
      stale = 0;
    } else if (++stale >= options.patience) {
      break;
    }
  }
  return result;
}

}  // namespace seqtf::eval
