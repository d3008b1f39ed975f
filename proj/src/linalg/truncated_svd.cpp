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

#include "seqtf/linalg/truncated_svd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqtf/error.hpp"
#include "seqtf/linalg/random.hpp"

namespace seqtf::linalg {
namespace {

void check_rank(const ImplicitMatrix& op, std::size_t rank) {
  const auto limit = static_cast<std::size_t>(std::min(op.rows(), op.cols()));
  require(rank >= 1 && rank <= limit, ErrorKind::kInvalidArgument,
          "truncated SVD rank " + std::to_string(rank) + " infeasible for a " +
              std::to_string(op.rows()) + " x " + std::to_string(op.cols()) + " operator");
}

}  // namespace

TruncatedSvd truncated_svd(const ImplicitMatrix& op, std::size_t rank, const SvdOptions& options,
                           const Eigen::MatrixXd* warm_start) {
  check_rank(op, rank);
  const auto r = static_cast<Eigen::Index>(rank);
  const Eigen::Index block =
      std::min<Eigen::Index>(r + std::max(options.oversampling, 0), std::min(op.rows(), op.cols()));

  Eigen::MatrixXd start = random_gaussian(op.rows(), block, options.seed);
  if (warm_start != nullptr && warm_start->rows() == op.rows()) {
    const Eigen::Index k = std::min(warm_start->cols(), block);
    start.leftCols(k) = warm_start->leftCols(k);
  }
  Eigen::MatrixXd basis = orthonormalize(start);

  Eigen::VectorXd previous;
  double change = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Eigen::MatrixXd z = op.apply_adjoint(basis);  // cols x block
    // Rayleigh-Ritz on B = basis^T Y = z^T: with z = Q_z R, B = R^T Q_z^T and
    // the left singular vectors of B are those of R^T.
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
    const Eigen::MatrixXd rt =
        qr.matrixQR().topRows(block).triangularView<Eigen::Upper>().toDenseMatrix().transpose();
    const Eigen::JacobiSVD<Eigen::MatrixXd> small(rt, Eigen::ComputeFullU);
    const Eigen::VectorXd sigma = small.singularValues().head(r);

    if (sigma(0) == 0.0) {
      return {basis.leftCols(r), sigma, it};
    }
    if (previous.size() == r) {
      change = (sigma - previous).cwiseAbs().maxCoeff() / sigma(0);
      if (change <= options.tolerance) {
        return {orthonormalize(basis * small.matrixU().leftCols(r)), sigma, it};
      }
    }
    if (it == options.max_iterations && !options.throw_on_cap) {
      return {orthonormalize(basis * small.matrixU().leftCols(r)), sigma, it};
    }
    previous = sigma;
    basis = orthonormalize(op.apply(z));
  }
  throw ConvergenceError("truncated SVD did not converge within " +
                             std::to_string(options.max_iterations) +
                             " iterations (relative singular value change " +
                             std::to_string(change) + ")",
                         change);
}

TruncatedSvd dense_truncated_svd(const ImplicitMatrix& op, std::size_t rank) {
  check_rank(op, rank);
  const auto r = static_cast<Eigen::Index>(rank);
  const Eigen::MatrixXd dense = op.to_dense();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeThinU);
  return {svd.matrixU().leftCols(r), svd.singularValues().head(r), 1};
}

}  // namespace seqtf::linalg
