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

#include "seqtf/linalg/kron.hpp"

#include "seqtf/error.hpp"

namespace seqtf::linalg {

Eigen::VectorXd kron_pair_apply(const Eigen::MatrixXd& z, const Eigen::VectorXd& v,
                                const Eigen::VectorXd& u) {
  require(z.cols() == v.size() * u.size(), ErrorKind::kInvalidArgument,
          "kron_pair_apply: Z has " + std::to_string(z.cols()) + " columns, expected " +
              std::to_string(v.size() * u.size()));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(z.rows());
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    if (v(b) == 0.0) continue;
    out.noalias() += v(b) * (z.middleCols(b * u.size(), u.size()) * u);
  }
  return out;
}

void kron_pair_accumulate(Eigen::VectorXd& out, const Eigen::VectorXd& v, const Eigen::VectorXd& u,
                          const Eigen::VectorXd& w, double alpha) {
  const Eigen::Index nu = u.size();
  const Eigen::Index nw = w.size();
  require(out.size() == v.size() * nu * nw, ErrorKind::kInvalidArgument,
          "kron_pair_accumulate: output length mismatch");
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    for (Eigen::Index a = 0; a < nu; ++a) {
      const double scale = alpha * v(b) * u(a);
      if (scale == 0.0) continue;
      out.segment((b * nu + a) * nw, nw) += scale * w;
    }
  }
}

}  // namespace seqtf::linalg
