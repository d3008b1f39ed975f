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

#include "seqtf/linalg/random.hpp"

#include <cmath>
#include <numbers>

#include "seqtf/error.hpp"

namespace seqtf::linalg {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  require(bound > 0, ErrorKind::kInvalidArgument, "uniform_index: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

namespace {

double unit_open(std::mt19937_64& rng) {
  // 53 random bits mapped into (0, 1).
  return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

}  // namespace

Eigen::MatrixXd random_gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd out(rows, cols);
  double* data = out.data();
  const Eigen::Index total = rows * cols;
  for (Eigen::Index k = 0; k < total; k += 2) {
    const double radius = std::sqrt(-2.0 * std::log(unit_open(rng)));
    const double angle = 2.0 * std::numbers::pi * unit_open(rng);
    data[k] = radius * std::cos(angle);
    if (k + 1 < total) data[k + 1] = radius * std::sin(angle);
  }
  return out;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& x) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(x.rows(), x.cols());
  // Fix signs so that R has a non-negative diagonal; makes the basis a
  // function of the input span and column order only.
  const auto& r = qr.matrixQR();
  for (Eigen::Index c = 0; c < std::min(x.rows(), x.cols()); ++c) {
    if (r(c, c) < 0.0) q.col(c) = -q.col(c);
  }
  return q;
}

Eigen::MatrixXd random_orthonormal(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  require(cols >= 1 && cols <= rows, ErrorKind::kInvalidArgument,
          "random_orthonormal needs 1 <= cols <= rows (got " + std::to_string(cols) + " > " +
              std::to_string(rows) + ")");
  return orthonormalize(random_gaussian(static_cast<Eigen::Index>(rows),
                                        static_cast<Eigen::Index>(cols), seed));
}

}  // namespace seqtf::linalg
