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

#include <Eigen/Dense>

namespace seqtf::attention {

// An item placed at a 0-based sequence position.
struct PositionedItem {
  std::int32_t item = 0;
  std::int32_t position = 0;

  friend bool operator==(const PositionedItem&, const PositionedItem&) = default;
};

// Right-aligns a time-ordered history into K slots: the most recent item goes
// to position K - 1 and histories longer than K keep only the last K items.
std::vector<PositionedItem> encode_history(std::span<const std::int32_t> items,
                                           std::size_t max_length);

// Moves every item one position down. Items at position 0 fall off and the
// last slot becomes vacant.
std::vector<PositionedItem> shift_left(std::span<const PositionedItem> entries);

// Read-only K_L x K_S Hankel view of a length-K vector, with
// K_S = K - K_L + 1 and entry (l, s) = p[l + s]. Holds no copy of the data,
// so the source must outlive the view.
class HankelView {
 public:
  HankelView(std::span<const double> source, std::size_t window_rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return source_.size() - rows_ + 1; }
  double operator()(std::size_t l, std::size_t s) const { return source_[l + s]; }
  std::span<const double> source() const { return source_; }

  Eigen::MatrixXd to_dense() const;

 private:
  std::span<const double> source_;
  std::size_t rows_;
};

inline HankelView hankelize(std::span<const double> source, std::size_t window_rows) {
  return HankelView(source, window_rows);
}

}  // namespace seqtf::attention
