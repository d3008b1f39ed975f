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

#include "seqtf/eval/grid_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "seqtf/error.hpp"
#include "seqtf/linalg/random.hpp"
#include "seqtf/models/factory.hpp"

namespace seqtf::eval {
namespace {

using models::ModelConfig;
using models::ModelKind;

template <class T>
std::vector<T> or_default(const std::vector<T>& values, T fallback) {
  return values.empty() ? std::vector<T>{fallback} : values;
}

bool ga_feasible(const models::TuckerRanks& r, std::size_t M, std::size_t N, std::size_t K) {
  return r.user >= 1 && r.item >= 1 && r.window >= 1 && r.user <= std::min(M, r.item * r.window) &&
         r.item <= std::min(N, r.user * r.window) && r.window <= std::min(K, r.user * r.item);
}

bool la_feasible(const models::TuckerRanks& r, std::size_t M, std::size_t N, std::size_t KL,
                 std::size_t KS) {
  return r.user >= 1 && r.item >= 1 && r.window >= 1 && r.shift >= 1 && r.window < KL &&
         r.shift < KS && r.user <= std::min(M, r.item * r.window * r.shift) &&
         r.item <= std::min(N, r.user * r.window * r.shift) &&
         r.window <= r.user * r.item * r.shift && r.shift <= r.user * r.item * r.window;
}

}  // namespace

std::vector<ModelConfig> enumerate_grid(const GridSpace& space, std::size_t num_users,
                                        std::size_t num_items) {
  std::vector<ModelConfig> points;
  const ModelConfig& base = space.base;
  const auto finish = [&](ModelConfig c) {
    for (const double s : or_default(space.scalings, base.scaling)) {
      for (const auto regime : or_default(space.regimes, base.regime)) {
        c.scaling = s;
        c.regime = regime;
        points.push_back(c);
      }
    }
  };

  switch (base.kind) {
    case ModelKind::kMostPopular:
      points.push_back(base);
      break;
    case ModelKind::kPureSvd:
      for (const std::size_t r : or_default(space.svd_ranks, base.rank)) {
        if (r < 1 || r > std::min(num_users, num_items)) continue;
        ModelConfig c = base;
        c.rank = r;
        finish(c);
      }
      break;
    case ModelKind::kGaSatf:
    case ModelKind::kLaSatf: {
      const bool local = base.kind == ModelKind::kLaSatf;
      const std::size_t K = base.max_length;
      const auto windows = local ? or_default(space.windows, base.window) : std::vector{base.window};
      for (const std::size_t KL : windows) {
        if (local && (KL < 1 || KL > K)) continue;
        for (const std::size_t r1 : or_default(space.user_ranks, base.ranks.user)) {
          const auto item_ranks =
              space.item_ranks.empty() ? std::vector<std::size_t>{r1} : space.item_ranks;
          for (const std::size_t r2 : item_ranks) {
            for (const std::size_t r3 : or_default(space.window_ranks, base.ranks.window)) {
              const auto shift_ranks = local ? or_default(space.shift_ranks, base.ranks.shift)
                                             : std::vector<std::size_t>{base.ranks.shift};
              for (const std::size_t r4 : shift_ranks) {
                const models::TuckerRanks ranks{r1, r2, r3, r4};
                const bool ok = local ? la_feasible(ranks, num_users, num_items, KL, K - KL + 1)
                                      : ga_feasible(ranks, num_users, num_items, K);
                if (!ok) continue;
                for (const double f : or_default(space.decays, base.decay)) {
                  ModelConfig c = base;
                  c.window = KL;
                  c.ranks = ranks;
                  c.decay = f;
                  finish(c);
                }
              }
            }
          }
        }
      }
      break;
    }
  }
  return points;
}

std::vector<std::size_t> sample_points(std::size_t total, std::size_t budget, std::uint64_t seed) {
  std::vector<std::size_t> indices(total);
  for (std::size_t i = 0; i < total; ++i) indices[i] = i;
  if (total <= budget) return indices;
  // Partial Fisher-Yates: the first `budget` slots form a uniform sample.
  std::mt19937_64 rng(linalg::mix_seed(seed, 77));
  for (std::size_t i = 0; i < budget; ++i) {
    const std::size_t j = i + linalg::uniform_index(rng, total - i);
    std::swap(indices[i], indices[j]);
  }
  indices.resize(budget);
  std::sort(indices.begin(), indices.end());
  return indices;
}

GridResult grid_search(const GridSpace& space, const data::InteractionLog& train,
                       const data::InteractionLog& validation, std::uint64_t seed,
                       const GridOptions& options) {
  require(space.budget >= 1, ErrorKind::kInvalidArgument, "grid budget must be at least 1");
  const auto points = enumerate_grid(space, train.num_users(), train.num_items());
  require(!points.empty(), ErrorKind::kConfig,
          "no feasible grid point for " + std::string(models::model_kind_name(space.base.kind)));
  const auto chosen = sample_points(points.size(), space.budget, seed);

  std::vector<GridPoint> log(chosen.size());
  std::vector<std::unique_ptr<models::Recommender>> trained(chosen.size());
  const auto run_point = [&](std::size_t slot) {
    const auto start = std::chrono::steady_clock::now();
    GridPoint& point = log[slot];
    point.index = chosen[slot];
    point.config = points[point.index];
    const auto score = [&](const models::Recommender& model) {
      return evaluate(model, train, validation, options.cutoff);
    };
    if (models::is_iterative(point.config.kind)) {
      auto trainer = models::make_sweep_trainer(point.config, train, options.training);
      std::vector<EvaluationReport> reports;
      auto result = early_stopping_train(
          *trainer,
          [&](const models::Recommender& model) {
            reports.push_back(score(model));
            return reports.back().ndcg.mean;
          },
          options.stopping);
      point.report = reports[static_cast<std::size_t>(result.best_sweep - 1)];
      point.sweep_count = result.best_sweep;
      point.metric_history = std::move(result.metrics);
      trained[slot] = std::move(result.model);
    } else {
      trained[slot] = models::train_baseline(point.config, train, options.training);
      point.report = score(*trained[slot]);
      point.metric_history = {point.report.ndcg.mean};
    }
    point.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, chosen.size()));
  if (workers == 1) {
    for (std::size_t slot = 0; slot < chosen.size(); ++slot) run_point(slot);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t slot = next++; slot < chosen.size(); slot = next++) {
            try {
              run_point(slot);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  GridResult result;
  for (std::size_t slot = 1; slot < log.size(); ++slot) {
    const GridPoint& a = log[slot];
    const GridPoint& b = log[result.best];
    const bool better =
        a.report.ndcg.mean > b.report.ndcg.mean ||
        (a.report.ndcg.mean == b.report.ndcg.mean && total_rank(a.config) < total_rank(b.config));
    if (better) result.best = slot;
  }
  result.best_model = std::move(trained[result.best]);
  result.log = std::move(log);
  return result;
}

}  // namespace seqtf::eval
