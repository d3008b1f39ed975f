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

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace seqtf::linalg {

// Splits [0, n) into `chunks` contiguous ranges, runs body(acc, begin, end)
// for each on its own thread, then sums the partial accumulators in chunk
// order. The result depends on the chunk count but never on scheduling.
template <class Acc, class Body>
Acc chunked_reduce(std::size_t n, std::size_t chunks, const Acc& zero, Body&& body) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  if (chunks == 1) {
    Acc acc = zero;
    body(acc, std::size_t{0}, n);
    return acc;
  }
  std::vector<Acc> partial(chunks, zero);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = n * c / chunks;
      const std::size_t end = n * (c + 1) / chunks;
      workers.emplace_back([&, c, begin, end] { body(partial[c], begin, end); });
    }
  }
  for (std::size_t c = 1; c < chunks; ++c) partial[0] += partial[c];
  return partial[0];
}

}  // namespace seqtf::linalg
