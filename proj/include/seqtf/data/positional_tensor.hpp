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
#include <span>
#include <vector>

#include "seqtf/data/interaction_log.hpp"

namespace seqtf::data {

// One observed (user, item, position) triple. Positions are 0-based; the most
// recent item of every non-empty user sits at position K - 1.
struct PositionalEntry {
  std::int32_t user = 0;
  std::int32_t item = 0;
  std::int32_t position = 0;

  friend bool operator==(const PositionalEntry&, const PositionalEntry&) = default;
};

// Binary M x N x K tensor in coordinate format. Values are implicitly 1.
// Entries are ordered by (user, position).
class SparsePositionalTensor {
 public:
  SparsePositionalTensor() = default;

  // Each sequence is one user's items in time order (oldest first). Longer
  // than K keeps the K most recent; shorter is right-aligned.
  static SparsePositionalTensor from_sequences(std::size_t num_users, std::size_t num_items,
                                               std::size_t max_length,
                                               const std::vector<std::vector<std::int32_t>>& sequences);

  std::size_t num_users() const { return num_users_; }
  std::size_t num_items() const { return num_items_; }
  std::size_t max_length() const { return max_length_; }
  const std::vector<PositionalEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  std::span<const PositionalEntry> user_entries(std::int32_t u) const;
  std::size_t sequence_length(std::int32_t u) const;

  // Interaction count per item over the stored (truncated) entries.
  std::vector<std::int64_t> item_counts() const;

 private:
  std::size_t num_users_ = 0;
  std::size_t num_items_ = 0;
  std::size_t max_length_ = 0;
  std::vector<PositionalEntry> entries_;
  std::vector<std::size_t> user_offsets_{0};
};

SparsePositionalTensor build_positional_tensor(const InteractionLog& train, std::size_t max_length);

}  // namespace seqtf::data
