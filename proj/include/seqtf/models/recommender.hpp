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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "seqtf/attention/attention_matrix.hpp"

namespace seqtf::models {

enum class ModelKind { kMostPopular, kPureSvd, kGaSatf, kLaSatf };

// Plain scores with V V^T h; restored scores with D^-1 V V^T D h.
enum class ProjectorRegime { kPlain, kRestored };

std::string_view model_kind_name(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);
std::string_view regime_name(ProjectorRegime regime);
ProjectorRegime parse_regime(std::string_view name);

// Multilinear ranks. `window` and `shift` are the two positional ranks of the
// local model; the global model uses `window` as its single positional rank.
struct TuckerRanks {
  std::size_t user = 1;
  std::size_t item = 1;
  std::size_t window = 1;
  std::size_t shift = 1;
  friend bool operator==(const TuckerRanks&, const TuckerRanks&) = default;
};

struct ModelConfig {
  ModelKind kind = ModelKind::kMostPopular;
  std::size_t rank = 1;  // PureSVD rank
  double scaling = 1.0;  // popularity exponent s
  ProjectorRegime regime = ProjectorRegime::kPlain;
  std::size_t max_length = 50;  // K
  std::size_t window = 1;       // K_L
  double decay = 0.0;           // attention exponent f
  attention::AttentionMode attention = attention::AttentionMode::kPowerDecay;
  TuckerRanks ranks;
  std::uint64_t seed = 0;
  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// Sum of the ranks that apply to the model kind; used as a tie-breaker.
std::size_t total_rank(const ModelConfig& config);

class Recommender {
 public:
  virtual ~Recommender() = default;

  const ModelConfig& config() const { return config_; }
  ModelKind kind() const { return config_.kind; }
  std::size_t num_items() const { return item_ids_.size(); }
  const std::vector<std::string>& item_ids() const { return item_ids_; }
  std::optional<std::int32_t> find_item(std::string_view id) const;

  // Score of every catalog item as the next interaction after `history`
  // (model item indices, oldest first, non-empty, all in range).
  virtual Eigen::VectorXd score(std::span<const std::int32_t> history) const = 0;

 protected:
  Recommender(ModelConfig config, std::vector<std::string> item_ids);

 private:
  ModelConfig config_;
  std::vector<std::string> item_ids_;
  std::unordered_map<std::string, std::int32_t> item_index_;
};

struct Prediction {
  std::vector<std::int32_t> items;
  std::size_t dropped_unknown = 0;
};

// Indices of the n best finite scores, descending, ties by ascending index.
std::vector<std::int32_t> top_n(const Eigen::VectorXd& scores, std::size_t n);

// 1-based rank of `target` under the same ordering, or nullopt when its
// score is -inf.
std::optional<std::size_t> rank_of(const Eigen::VectorXd& scores, std::int32_t target);

// Model scores with seen items masked to -inf when requested. Out-of-range
// indices are dropped and counted.
Eigen::VectorXd masked_scores(const Recommender& model, std::span<const std::int32_t> history,
                              bool exclude_seen, std::size_t* dropped_unknown = nullptr);

Prediction predict_next(const Recommender& model, std::span<const std::int32_t> history,
                        std::size_t n, bool exclude_seen);
Prediction predict_next(const Recommender& model, std::span<const std::string> history,
                        std::size_t n, bool exclude_seen);

}  // namespace seqtf::models
