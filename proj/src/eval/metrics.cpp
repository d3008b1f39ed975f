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

#include "seqtf/eval/metrics.hpp"

#include <cmath>

#include "seqtf/error.hpp"

namespace seqtf::eval {

double ndcg_single(std::optional<std::size_t> rank, std::size_t cutoff) {
  require(cutoff >= 1, ErrorKind::kInvalidArgument, "cutoff must be at least 1");
  if (!rank) return 0.0;
  require(*rank >= 1, ErrorKind::kInvalidArgument, "rank is 1-based");
  if (*rank > cutoff) return 0.0;
  return 1.0 / std::log2(static_cast<double>(*rank) + 1.0);
}

MetricSummary summarize(std::span<const double> values) {
  MetricSummary out;
  if (values.empty()) return out;
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() > 1) {
    double sq = 0.0;
    for (const double v : values) sq += (v - out.mean) * (v - out.mean);
    out.standard_error = std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
  }
  return out;
}

}  // namespace seqtf::eval
