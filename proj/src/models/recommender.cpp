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

#include "seqtf/models/recommender.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "seqtf/error.hpp"

namespace seqtf::models {

std::string_view model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kMostPopular: return "mp";
    case ModelKind::kPureSvd: return "puresvd";
    case ModelKind::kGaSatf: return "ga-satf";
    case ModelKind::kLaSatf: return "la-satf";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "mp") return ModelKind::kMostPopular;
  if (name == "puresvd" || name == "puresvd-n") return ModelKind::kPureSvd;
  if (name == "ga-satf") return ModelKind::kGaSatf;
  if (name == "la-satf") return ModelKind::kLaSatf;
  throw Error(ErrorKind::kConfig, "unknown model kind '" + std::string(name) + "'");
}

std::string_view regime_name(ProjectorRegime regime) {
  return regime == ProjectorRegime::kPlain ? "plain" : "restored";
}

ProjectorRegime parse_regime(std::string_view name) {
  if (name == "plain") return ProjectorRegime::kPlain;
  if (name == "restored") return ProjectorRegime::kRestored;
  throw Error(ErrorKind::kConfig, "unknown projector regime '" + std::string(name) + "'");
}

std::size_t total_rank(const ModelConfig& config) {
  switch (config.kind) {
    case ModelKind::kMostPopular: return 0;
    case ModelKind::kPureSvd: return config.rank;
    case ModelKind::kGaSatf: return config.ranks.user + config.ranks.item + config.ranks.window;
    case ModelKind::kLaSatf:
      return config.ranks.user + config.ranks.item + config.ranks.window + config.ranks.shift;
  }
  return 0;
}

Recommender::Recommender(ModelConfig config, std::vector<std::string> item_ids)
    : config_(std::move(config)), item_ids_(std::move(item_ids)) {
  item_index_.reserve(item_ids_.size());
  for (std::size_t j = 0; j < item_ids_.size(); ++j) {
    item_index_.emplace(item_ids_[j], static_cast<std::int32_t>(j));
  }
}

std::optional<std::int32_t> Recommender::find_item(std::string_view id) const {
  const auto it = item_index_.find(std::string(id));
  if (it == item_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool ranks_before(const Eigen::VectorXd& scores, Eigen::Index a, Eigen::Index b) {
  return scores(a) > scores(b) || (scores(a) == scores(b) && a < b);
}

}  // namespace

std::vector<std::int32_t> top_n(const Eigen::VectorXd& scores, std::size_t n) {
  std::vector<std::int32_t> candidates;
  candidates.reserve(static_cast<std::size_t>(scores.size()));
  for (Eigen::Index j = 0; j < scores.size(); ++j) {
    if (scores(j) != -std::numeric_limits<double>::infinity()) {
      candidates.push_back(static_cast<std::int32_t>(j));
    }
  }
  const std::size_t keep = std::min(n, candidates.size());
  const auto before = [&](std::int32_t a, std::int32_t b) { return ranks_before(scores, a, b); };
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                    candidates.end(), before);
  candidates.resize(keep);
  return candidates;
}

std::optional<std::size_t> rank_of(const Eigen::VectorXd& scores, std::int32_t target) {
  if (scores(target) == -std::numeric_limits<double>::infinity()) return std::nullopt;
  std::size_t rank = 1;
  for (Eigen::Index j = 0; j < scores.size(); ++j) {
    if (j != target && ranks_before(scores, j, target)) ++rank;
  }
  return rank;
}

Eigen::VectorXd masked_scores(const Recommender& model, std::span<const std::int32_t> history,
                              bool exclude_seen, std::size_t* dropped_unknown) {
  std::vector<std::int32_t> usable;
  usable.reserve(history.size());
  const auto n_items = static_cast<std::int32_t>(model.num_items());
  for (const std::int32_t item : history) {
    if (item >= 0 && item < n_items) usable.push_back(item);
  }
  if (dropped_unknown != nullptr) *dropped_unknown += history.size() - usable.size();
  require(!usable.empty(), ErrorKind::kInvalidArgument, "cold user: no usable history");
  Eigen::VectorXd scores = model.score(usable);
  if (exclude_seen) {
    for (const std::int32_t item : usable) scores(item) = -std::numeric_limits<double>::infinity();
  }
  return scores;
}

Prediction predict_next(const Recommender& model, std::span<const std::int32_t> history,
                        std::size_t n, bool exclude_seen) {
  require(n >= 1, ErrorKind::kInvalidArgument, "prediction cutoff must be at least 1");
  Prediction prediction;
  const Eigen::VectorXd scores =
      masked_scores(model, history, exclude_seen, &prediction.dropped_unknown);
  prediction.items = top_n(scores, n);
  return prediction;
}

Prediction predict_next(const Recommender& model, std::span<const std::string> history,
                        std::size_t n, bool exclude_seen) {
  require(n >= 1, ErrorKind::kInvalidArgument, "prediction cutoff must be at least 1");
  std::vector<std::int32_t> indices;
  std::size_t unknown = 0;
  for (const std::string& id : history) {
    if (const auto j = model.find_item(id)) {
      indices.push_back(*j);
    } else {
      ++unknown;
    }
  }
  Prediction prediction = predict_next(model, indices, n, exclude_seen);
  prediction.dropped_unknown += unknown;
  return prediction;
}

}  // namespace seqtf::models
