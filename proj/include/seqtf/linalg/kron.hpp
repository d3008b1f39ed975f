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

#include <Eigen/Dense>

namespace seqtf::linalg {

// Kronecker ordering used throughout: (v kron u)[b * |u| + a] = v[b] * u[a].

// Z * (v kron u) for Z of shape d x (|v| * |u|), without forming v kron u.
Eigen::VectorXd kron_pair_apply(const Eigen::MatrixXd& z, const Eigen::VectorXd& v,
                                const Eigen::VectorXd& u);

// out += alpha * ((v kron u) kron w); out has length |v| * |u| * |w|.
void kron_pair_accumulate(Eigen::VectorXd& out, const Eigen::VectorXd& v, const Eigen::VectorXd& u,
                          const Eigen::VectorXd& w, double alpha = 1.0);

}  // namespace seqtf::linalg
