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

#include "seqtf/eval/evaluate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "seqtf/error.hpp"
#include "seqtf/linalg/parallel.hpp"

namespace seqtf::eval {
namespace {

struct UserSteps {
  std::int32_t test_user = 0;
  std::vector<std::size_t> steps;  // indices into the time-ordered sequence
};

}  // namespace

EvaluationReport evaluate(const models::Recommender& model, const data::InteractionLog& train,
                          const data::InteractionLog& test, std::size_t cutoff,
                          const EvaluateOptions& options) {
  require(!test.empty(), ErrorKind::kData, "empty test split");
  require(cutoff >= 1, ErrorKind::kInvalidArgument, "cutoff must be at least 1");
  const auto& rows = test.interactions();

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].timestamp < rows[b].timestamp;
  });

  std::vector<UserSteps> users;
  std::unordered_map<std::int32_t, std::size_t> slot;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const std::int32_t u = rows[order[t]].user;
    const auto [it, inserted] = slot.emplace(u, users.size());
    if (inserted) users.push_back({u, {}});
    users[it->second].steps.push_back(t);
  }

  std::vector<StepOutcome> outcomes(order.size());
  std::vector<std::size_t> dropped(order.size(), 0);
  const auto run_users = [&](int&, std::size_t begin, std::size_t end) {
    for (std::size_t g = begin; g < end; ++g) {
      const UserSteps& us = users[g];
      std::vector<std::int32_t> history;
      std::size_t unknown = 0;
      if (const auto tu = train.find_user(test.user_id(us.test_user))) {
        for (const auto& x : train.user_history(*tu)) {
          if (const auto j = model.find_item(train.item_id(x.item))) {
            history.push_back(*j);
          } else {
            ++unknown;
          }
        }
      }
      for (const std::size_t t : us.steps) {
        const data::Interaction& x = rows[order[t]];
        StepOutcome& out = outcomes[t];
        out.test_index = order[t];
        const auto target = model.find_item(test.item_id(x.item));
        if (target && !history.empty()) {
          const Eigen::VectorXd scores = models::masked_scores(model, history, true);
          out.evaluated = true;
          out.rank = models::rank_of(scores, *target);
          out.recommended = models::top_n(scores, cutoff);
          dropped[t] = unknown;
        }
        if (target) {
          history.push_back(*target);
        } else {
          ++unknown;
        }
      }
    }
  };
  linalg::chunked_reduce<int>(users.size(), options.threads, 0, run_users);

  EvaluationReport report;
  report.cutoff = cutoff;
  std::vector<double> hits;
  std::vector<double> gains;
  std::unordered_set<std::int32_t> covered;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const StepOutcome& out = outcomes[t];
    if (!out.evaluated) {
      ++report.skipped_cold_count;
      continue;
    }
    ++report.evaluated_count;
    report.dropped_unknown += dropped[t];
    hits.push_back(out.rank && *out.rank <= cutoff ? 1.0 : 0.0);
    gains.push_back(ndcg_single(out.rank, cutoff));
    covered.insert(out.recommended.begin(), out.recommended.end());
  }
  report.hr = summarize(hits);
  report.ndcg = summarize(gains);
  report.cov = train.num_items() == 0
                   ? 0.0
                   : static_cast<double>(covered.size()) / static_cast<double>(train.num_items());
  if (options.trace != nullptr) *options.trace = std::move(outcomes);
  return report;
}

}  // namespace seqtf::eval
