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

#include "seqtf/data/split.hpp"

#include <algorithm>
#include <limits>

#include "seqtf/error.hpp"

namespace seqtf::data {

TimeSplit timepoint_split(const InteractionLog& log, std::int64_t t_valid, std::int64_t t_test) {
  require(!log.empty(), ErrorKind::kData, "cannot split an empty log");
  require(t_valid < t_test, ErrorKind::kInvalidArgument, "t_valid must be before t_test");
  require(t_valid > log.min_timestamp() && t_test <= log.max_timestamp(),
          ErrorKind::kInvalidArgument, "split boundaries outside the log's time range");

  std::vector<RawInteraction> parts[3];
  for (const RawInteraction& row : log.to_raw()) {
    const int which = row.timestamp < t_valid ? 0 : (row.timestamp < t_test ? 1 : 2);
    parts[which].push_back(row);
  }
  const char* names[3] = {"train", "validation", "test"};
  for (int p = 0; p < 3; ++p) {
    require(!parts[p].empty(), ErrorKind::kData, std::string("empty ") + names[p] + " part");
  }
  return TimeSplit{InteractionLog::from_raw(parts[0]), InteractionLog::from_raw(parts[1]),
                   InteractionLog::from_raw(parts[2]), t_valid, t_test};
}

std::int64_t boundary_for_tail_count(const InteractionLog& log, std::size_t count,
                                     std::int64_t upper) {
  require(count >= 1, ErrorKind::kInvalidArgument, "tail count must be positive");
  std::vector<std::int64_t> stamps;
  for (const Interaction& x : log.interactions()) {
    if (x.timestamp < upper) stamps.push_back(x.timestamp);
  }
  require(stamps.size() >= count, ErrorKind::kData,
          "not enough interactions before the boundary to hold " + std::to_string(count));
  std::sort(stamps.begin(), stamps.end());
  return stamps[stamps.size() - count];
}

std::pair<std::int64_t, std::int64_t> boundaries_for_counts(const InteractionLog& log,
                                                            std::size_t valid_count,
                                                            std::size_t test_count) {
  const std::int64_t t_test =
      boundary_for_tail_count(log, test_count, std::numeric_limits<std::int64_t>::max());
  const std::int64_t t_valid = boundary_for_tail_count(log, valid_count, t_test);
  return {t_valid, t_test};
}

}  // namespace seqtf::data
