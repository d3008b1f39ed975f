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

#include "seqtf/data/positional_tensor.hpp"

#include <unordered_set>

#include "seqtf/error.hpp"

namespace seqtf::data {

SparsePositionalTensor SparsePositionalTensor::from_sequences(
    std::size_t num_users, std::size_t num_items, std::size_t max_length,
    const std::vector<std::vector<std::int32_t>>& sequences) {
  require(max_length >= 1, ErrorKind::kInvalidArgument, "sequence length K must be at least 1");
  require(sequences.size() == num_users, ErrorKind::kInvalidArgument,
          "one sequence per user expected");

  SparsePositionalTensor tensor;
  tensor.num_users_ = num_users;
  tensor.num_items_ = num_items;
  tensor.max_length_ = max_length;
  tensor.user_offsets_.assign(1, 0);
  const auto K = static_cast<std::int32_t>(max_length);
  for (std::size_t u = 0; u < num_users; ++u) {
    const auto& seq = sequences[u];
    const std::size_t kept = std::min(seq.size(), max_length);
    const std::size_t first = seq.size() - kept;
    std::unordered_set<std::int32_t> items;
    for (std::size_t p = 0; p < kept; ++p) {
      const std::int32_t item = seq[first + p];
      require(item >= 0 && static_cast<std::size_t>(item) < num_items,
              ErrorKind::kInvalidArgument, "item index out of range");
      require(items.insert(item).second, ErrorKind::kData,
              "item repeated within one user's sequence");
      // The p-th retained item (0-based) of n lands at K - n + p.
      tensor.entries_.push_back({static_cast<std::int32_t>(u), item,
                                 K - static_cast<std::int32_t>(kept) + static_cast<std::int32_t>(p)});
    }
    tensor.user_offsets_.push_back(tensor.entries_.size());
  }
  return tensor;
}

std::span<const PositionalEntry> SparsePositionalTensor::user_entries(std::int32_t u) const {
  return std::span<const PositionalEntry>(entries_)
      .subspan(user_offsets_[u], user_offsets_[u + 1] - user_offsets_[u]);
}

std::size_t SparsePositionalTensor::sequence_length(std::int32_t u) const {
  return user_offsets_[u + 1] - user_offsets_[u];
}

std::vector<std::int64_t> SparsePositionalTensor::item_counts() const {
  std::vector<std::int64_t> counts(num_items_, 0);
  for (const PositionalEntry& e : entries_) ++counts[e.item];
  return counts;
}

SparsePositionalTensor build_positional_tensor(const InteractionLog& train, std::size_t max_length) {
  std::vector<std::vector<std::int32_t>> sequences(train.num_users());
  for (std::size_t u = 0; u < train.num_users(); ++u) {
    for (const Interaction& x : train.user_history(static_cast<std::int32_t>(u))) {
      sequences[u].push_back(x.item);
    }
  }
  return SparsePositionalTensor::from_sequences(train.num_users(), train.num_items(), max_length,
                                                sequences);
}

}  // namespace seqtf::data
