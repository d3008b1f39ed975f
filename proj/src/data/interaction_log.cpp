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

#include "seqtf/data/interaction_log.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "seqtf/error.hpp"

namespace seqtf::data {

InteractionLog InteractionLog::from_raw(std::span<const RawInteraction> rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].timestamp < rows[b].timestamp;
  });

  InteractionLog log;
  std::unordered_set<std::uint64_t> seen_pairs;
  log.interactions_.reserve(rows.size());
  for (std::size_t idx : order) {
    const RawInteraction& row = rows[idx];
    require(row.timestamp >= 0, ErrorKind::kData,
            "negative timestamp for user '" + row.user + "'");
    auto [user_it, new_user] =
        log.user_index_.try_emplace(row.user, static_cast<std::int32_t>(log.user_ids_.size()));
    if (new_user) log.user_ids_.push_back(row.user);
    auto [item_it, new_item] =
        log.item_index_.try_emplace(row.item, static_cast<std::int32_t>(log.item_ids_.size()));
    if (new_item) log.item_ids_.push_back(row.item);

    const std::uint64_t key = (static_cast<std::uint64_t>(user_it->second) << 32) |
                              static_cast<std::uint32_t>(item_it->second);
    if (!seen_pairs.insert(key).second) continue;
    log.interactions_.push_back({user_it->second, item_it->second, row.timestamp});
  }

  // Already time-ordered, so a stable sort on the user keeps ingestion order
  // for equal timestamps.
  std::stable_sort(log.interactions_.begin(), log.interactions_.end(),
                   [](const Interaction& a, const Interaction& b) { return a.user < b.user; });

  log.user_offsets_.assign(log.user_ids_.size() + 1, 0);
  for (const Interaction& x : log.interactions_) ++log.user_offsets_[x.user + 1];
  std::partial_sum(log.user_offsets_.begin(), log.user_offsets_.end(), log.user_offsets_.begin());
  return log;
}

std::optional<std::int32_t> InteractionLog::find_user(std::string_view id) const {
  auto it = user_index_.find(std::string(id));
  if (it == user_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int32_t> InteractionLog::find_item(std::string_view id) const {
  auto it = item_index_.find(std::string(id));
  if (it == item_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Interaction> InteractionLog::user_history(std::int32_t u) const {
  require(u >= 0 && static_cast<std::size_t>(u) < num_users(), ErrorKind::kInvalidArgument,
          "user index out of range");
  return std::span<const Interaction>(interactions_)
      .subspan(user_offsets_[u], user_offsets_[u + 1] - user_offsets_[u]);
}

std::vector<std::int64_t> InteractionLog::item_counts() const {
  std::vector<std::int64_t> counts(num_items(), 0);
  for (const Interaction& x : interactions_) ++counts[x.item];
  return counts;
}

std::int64_t InteractionLog::min_timestamp() const {
  require(!empty(), ErrorKind::kData, "empty interaction log");
  return std::min_element(interactions_.begin(), interactions_.end(),
                          [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; })
      ->timestamp;
}

std::int64_t InteractionLog::max_timestamp() const {
  require(!empty(), ErrorKind::kData, "empty interaction log");
  return std::max_element(interactions_.begin(), interactions_.end(),
                          [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; })
      ->timestamp;
}

std::vector<RawInteraction> InteractionLog::to_raw() const {
  std::vector<RawInteraction> rows;
  rows.reserve(interactions_.size());
  for (const Interaction& x : interactions_) {
    rows.push_back({user_ids_[x.user], item_ids_[x.item], x.timestamp});
  }
  return rows;
}

InteractionLog merge_logs(const InteractionLog& first, const InteractionLog& second) {
  std::vector<RawInteraction> rows = first.to_raw();
  std::vector<RawInteraction> more = second.to_raw();
  rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return InteractionLog::from_raw(rows);
}

}  // namespace seqtf::data
