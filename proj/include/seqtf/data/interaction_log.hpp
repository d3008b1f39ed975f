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

namespace seqtf::data {

// A row as it arrives from the source, before id densification.
struct RawInteraction {
  std::string user;
  std::string item;
  std::int64_t timestamp = 0;
};

struct Interaction {
  std::int32_t user = 0;
  std::int32_t item = 0;
  std::int64_t timestamp = 0;

  friend bool operator==(const Interaction&, const Interaction&) = default;
};

// Deduplicated, densely indexed interaction list.
//
// Interactions are sorted by (user, timestamp, ingestion order). Users and
// items are numbered by first appearance in the time-ordered stream, so every
// index in [0, num_users()) and [0, num_items()) has at least one interaction.
class InteractionLog {
 public:
  InteractionLog() = default;

  // Duplicate (user, item) pairs keep their earliest occurrence; equal
  // timestamps are resolved by position in `rows`.
  static InteractionLog from_raw(std::span<const RawInteraction> rows);

  const std::vector<Interaction>& interactions() const { return interactions_; }
  std::size_t size() const { return interactions_.size(); }
  bool empty() const { return interactions_.empty(); }
  std::size_t num_users() const { return user_ids_.size(); }
  std::size_t num_items() const { return item_ids_.size(); }

  const std::vector<std::string>& user_ids() const { return user_ids_; }
  const std::vector<std::string>& item_ids() const { return item_ids_; }
  const std::string& user_id(std::int32_t u) const { return user_ids_.at(u); }
  const std::string& item_id(std::int32_t j) const { return item_ids_.at(j); }
  std::optional<std::int32_t> find_user(std::string_view id) const;
  std::optional<std::int32_t> find_item(std::string_view id) const;

  // Time-ordered interactions of one user.
  std::span<const Interaction> user_history(std::int32_t u) const;

  // Interaction count per item index.
  std::vector<std::int64_t> item_counts() const;

  std::int64_t min_timestamp() const;
  std::int64_t max_timestamp() const;

  // Rows in this log's (user, timestamp) order with external ids restored.
  std::vector<RawInteraction> to_raw() const;

 private:
  std::vector<Interaction> interactions_;
  std::vector<std::string> user_ids_;
  std::vector<std::string> item_ids_;
  std::unordered_map<std::string, std::int32_t> user_index_;
  std::unordered_map<std::string, std::int32_t> item_index_;
  std::vector<std::size_t> user_offsets_;
};

// Union of two logs keyed by external ids, re-densified.
InteractionLog merge_logs(const InteractionLog& first, const InteractionLog& second);

}  // namespace seqtf::data
