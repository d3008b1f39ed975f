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

// Deterministic synthetic data for tests.

#include <cstdint>
#include <string>
#include <vector>

#include "seqtf/data/interaction_log.hpp"
#include "seqtf/data/positional_tensor.hpp"

namespace seqtf::testing {

// Every user gets between 1 and min(K, N) distinct random items.
data::SparsePositionalTensor random_tensor(std::size_t users, std::size_t items, std::size_t length,
                                           std::uint64_t seed);

// One user per sequence ("u0", "u1", ...); items are used verbatim.
// Timestamps are `start + step` so every user's sequence is time-ordered.
std::vector<data::RawInteraction> rows_from_sequences(
    const std::vector<std::vector<std::string>>& sequences, std::int64_t start = 1);

data::InteractionLog log_from_sequences(const std::vector<std::vector<std::string>>& sequences,
                                        std::int64_t start = 1);

// Users walking a deterministic successor function over `items` items
// (a single cycle, so no walk repeats an item). Item ids are "i0", "i1", ...
struct MarkovCatalog {
  std::vector<int> successor;
  std::vector<std::vector<std::string>> sequences;
};
MarkovCatalog markov_catalog(std::size_t items, std::size_t users, std::size_t min_length,
                             std::size_t max_length, std::uint64_t seed);

}  // namespace seqtf::testing
