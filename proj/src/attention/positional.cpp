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

#include "seqtf/attention/positional.hpp"

#include "seqtf/error.hpp"

namespace seqtf::attention {

std::vector<PositionedItem> encode_history(std::span<const std::int32_t> items,
                                           std::size_t max_length) {
  require(max_length >= 1, ErrorKind::kInvalidArgument, "sequence length K must be at least 1");
  const std::size_t kept = std::min(items.size(), max_length);
  const std::size_t first = items.size() - kept;
  std::vector<PositionedItem> out;
  out.reserve(kept);
  for (std::size_t p = 0; p < kept; ++p) {
    out.push_back({items[first + p], static_cast<std::int32_t>(max_length - kept + p)});
  }
  return out;
}

std::vector<PositionedItem> shift_left(std::span<const PositionedItem> entries) {
  std::vector<PositionedItem> out;
  out.reserve(entries.size());
  for (const PositionedItem& e : entries) {
    if (e.position > 0) out.push_back({e.item, e.position - 1});
  }
  return out;
}

HankelView::HankelView(std::span<const double> source, std::size_t window_rows)
    : source_(source), rows_(window_rows) {
  require(window_rows >= 1 && window_rows <= source.size(), ErrorKind::kInvalidArgument,
          "Hankel window must satisfy 1 <= K_L <= K");
}

Eigen::MatrixXd HankelView::to_dense() const {
  Eigen::MatrixXd out(rows(), cols());
  for (std::size_t l = 0; l < rows(); ++l) {
    for (std::size_t s = 0; s < cols(); ++s) out(l, s) = (*this)(l, s);
  }
  return out;
}

}  // namespace seqtf::attention
