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

#include <Eigen/Dense>

namespace seqtf::linalg {

enum class ConvolutionPath { kAuto, kDirect, kFft };

// Default length at which kAuto switches to the FFT.
inline constexpr std::size_t kDefaultFftThreshold = 32;

// Pairwise linear convolution of the columns of `a` (La x p) and `b`
// (Lb x q). Column c + p * e of the (La + Lb - 1) x (p * q) result holds
// out[t] = sum_{l + s = t} a(l, c) * b(s, e).
Eigen::MatrixXd convolve_columns(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                 ConvolutionPath path = ConvolutionPath::kAuto,
                                 std::size_t fft_threshold = kDefaultFftThreshold);

// Column-paired correlation summed over columns:
// out[l] = sum_e sum_s g(l + s, e) * b(s, e), for l in [0, Lg - Lb].
// `g` is Lg x p and `b` is Lb x p.
Eigen::VectorXd correlate_columns(const Eigen::MatrixXd& g, const Eigen::MatrixXd& b,
                                  ConvolutionPath path = ConvolutionPath::kAuto,
                                  std::size_t fft_threshold = kDefaultFftThreshold);

bool use_fft(ConvolutionPath path, std::size_t length, std::size_t fft_threshold);

}  // namespace seqtf::linalg
