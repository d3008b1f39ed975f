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
#include <random>

#include <Eigen/Dense>

namespace seqtf::linalg {

// Derives an independent stream seed from a base seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform integer in [0, bound) by rejection; unlike std distributions the
// sequence is fixed across standard library implementations.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

// i.i.d. standard normal entries (Box-Muller over mt19937_64).
Eigen::MatrixXd random_gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

// Column-orthonormal rows x cols matrix from the QR of a Gaussian draw.
Eigen::MatrixXd random_orthonormal(std::size_t rows, std::size_t cols, std::uint64_t seed);

// Orthonormal basis of the column span via Householder QR; the result always
// has orthonormal columns, even when the input is rank deficient.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& x);

}  // namespace seqtf::linalg
