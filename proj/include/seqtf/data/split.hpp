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
#include <utility>

#include "seqtf/data/interaction_log.hpp"

namespace seqtf::data {

struct TimeSplit {
  InteractionLog train;
  InteractionLog validation;
  InteractionLog test;
  std::int64_t t_valid = 0;
  std::int64_t t_test = 0;
};

// Half-open partition: train < t_valid <= validation < t_test <= test.
// Each part is re-densified on its own; parts are joined by external id.
TimeSplit timepoint_split(const InteractionLog& log, std::int64_t t_valid,
                          std::int64_t t_test);

// Largest timestamp t such that at least `count` interactions fall in
// [t, upper). Used to place split boundaries by interaction volume.
std::int64_t boundary_for_tail_count(const InteractionLog& log, std::size_t count,
                                     std::int64_t upper);

// (t_valid, t_test) giving roughly `test_count` test and `valid_count`
// validation interactions counted from the end of the log.
std::pair<std::int64_t, std::int64_t> boundaries_for_counts(const InteractionLog& log,
                                                            std::size_t valid_count,
                                                            std::size_t test_count);

}  // namespace seqtf::data
