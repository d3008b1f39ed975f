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

#include "seqtf/linalg/convolution.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>

#include "seqtf/error.hpp"

namespace seqtf::linalg {
namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

// Real-to-complex transform of every column, zero-padded to length n.
Eigen::MatrixXcd rfft_columns(const Eigen::MatrixXd& x, int n) {
  const int cols = static_cast<int>(x.cols());
  const int bins = n / 2 + 1;
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(n, cols);
  padded.topRows(x.rows()) = x;
  Eigen::MatrixXcd out(bins, cols);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_many_dft_r2c(1, &n, cols, padded.data(), nullptr, 1, n,
                                  reinterpret_cast<fftw_complex*>(out.data()), nullptr, 1, bins,
                                  FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

// Inverse of rfft_columns, normalized.
Eigen::MatrixXd irfft_columns(Eigen::MatrixXcd spectrum, int n) {
  const int cols = static_cast<int>(spectrum.cols());
  const int bins = n / 2 + 1;
  Eigen::MatrixXd out(n, cols);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_many_dft_c2r(1, &n, cols, reinterpret_cast<fftw_complex*>(spectrum.data()),
                                  nullptr, 1, bins, out.data(), nullptr, 1, n, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out / static_cast<double>(n);
}

}  // namespace

bool use_fft(ConvolutionPath path, std::size_t length, std::size_t fft_threshold) {
  switch (path) {
    case ConvolutionPath::kDirect: return false;
    case ConvolutionPath::kFft: return true;
    case ConvolutionPath::kAuto: break;
  }
  return length >= fft_threshold;
}

Eigen::MatrixXd convolve_columns(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                 ConvolutionPath path, std::size_t fft_threshold) {
  require(a.rows() >= 1 && b.rows() >= 1, ErrorKind::kInvalidArgument,
          "convolution of empty columns");
  const Eigen::Index p = a.cols();
  const Eigen::Index q = b.cols();
  const Eigen::Index length = a.rows() + b.rows() - 1;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(length, p * q);
  if (p == 0 || q == 0) return out;

  if (!use_fft(path, static_cast<std::size_t>(length), fft_threshold)) {
    for (Eigen::Index e = 0; e < q; ++e) {
      for (Eigen::Index c = 0; c < p; ++c) {
        auto col = out.col(c + p * e);
        for (Eigen::Index s = 0; s < b.rows(); ++s) {
          const double bs = b(s, e);
          for (Eigen::Index l = 0; l < a.rows(); ++l) col(l + s) += a(l, c) * bs;
        }
      }
    }
    return out;
  }

  // Linear convolution fits exactly in a circular one of length La + Lb - 1.
  const int n = static_cast<int>(length);
  const Eigen::MatrixXcd fa = rfft_columns(a, n);
  const Eigen::MatrixXcd fb = rfft_columns(b, n);
  Eigen::MatrixXcd products(fa.rows(), p * q);
  for (Eigen::Index e = 0; e < q; ++e) {
    for (Eigen::Index c = 0; c < p; ++c) {
      products.col(c + p * e) = fa.col(c).cwiseProduct(fb.col(e));
    }
  }
  return irfft_columns(std::move(products), n);
}

Eigen::VectorXd correlate_columns(const Eigen::MatrixXd& g, const Eigen::MatrixXd& b,
                                  ConvolutionPath path, std::size_t fft_threshold) {
  require(g.cols() == b.cols(), ErrorKind::kInvalidArgument, "correlation: column mismatch");
  require(b.rows() >= 1 && g.rows() >= b.rows(), ErrorKind::kInvalidArgument,
          "correlation: kernel longer than signal");
  const Eigen::Index out_len = g.rows() - b.rows() + 1;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(out_len);
  if (g.cols() == 0) return out;

  if (!use_fft(path, static_cast<std::size_t>(g.rows()), fft_threshold)) {
    for (Eigen::Index e = 0; e < g.cols(); ++e) {
      for (Eigen::Index l = 0; l < out_len; ++l) {
        double acc = 0.0;
        for (Eigen::Index s = 0; s < b.rows(); ++s) acc += g(l + s, e) * b(s, e);
        out(l) += acc;
      }
    }
    return out;
  }

  // Convolve with the reversed kernel; only the wrap-free tail is read.
  const int n = static_cast<int>(g.rows());
  const Eigen::MatrixXd reversed = b.colwise().reverse();
  const Eigen::MatrixXcd fg = rfft_columns(g, n);
  const Eigen::MatrixXcd fb = rfft_columns(reversed, n);
  Eigen::MatrixXcd summed = fg.cwiseProduct(fb).rowwise().sum();
  const Eigen::MatrixXd full = irfft_columns(std::move(summed), n);
  return full.col(0).segment(b.rows() - 1, out_len);
}

}  // namespace seqtf::linalg
