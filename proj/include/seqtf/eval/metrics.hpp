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
#include <optional>
#include <span>

namespace seqtf::eval {

// Gain of a single hidden item: 1 / log2(rank + 1) inside the cutoff.
// `rank` is 1-based; nullopt is a miss.
double ndcg_single(std::optional<std::size_t> rank, std::size_t cutoff);

struct MetricSummary {
  double mean = 0.0;
  double standard_error = 0.0;  // sample standard deviation / sqrt(count)
};

MetricSummary summarize(std::span<const double> values);

}  // namespace seqtf::eval
