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

#include <cstdint>
#include <functional>
#include <utility>

#include <Eigen/Dense>

namespace seqtf::linalg {

// A linear operator known only through its action. Both maps work on blocks
// of column vectors so that one pass over sparse data can serve a whole
// Krylov block.
class ImplicitMatrix {
 public:
  using BlockMap = std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>;

  ImplicitMatrix(Eigen::Index rows, Eigen::Index cols, BlockMap apply, BlockMap apply_adjoint)
      : rows_(rows), cols_(cols), apply_(std::move(apply)), apply_adjoint_(std::move(apply_adjoint)) {}

  static ImplicitMatrix from_dense(Eigen::MatrixXd matrix);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  // Y * X for X of shape cols x b.
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
  // Y^T * X for X of shape rows x b.
  Eigen::MatrixXd apply_adjoint(const Eigen::MatrixXd& x) const;

  Eigen::VectorXd matvec(const Eigen::VectorXd& v) const { return apply(v).col(0); }
  Eigen::VectorXd rmatvec(const Eigen::VectorXd& u) const { return apply_adjoint(u).col(0); }

  // Applies the operator to the identity. Only for small operators.
  Eigen::MatrixXd to_dense() const;

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  BlockMap apply_;
  BlockMap apply_adjoint_;
};

// Largest |<Yv, u> - <v, Y^T u>| / (|u| |v|) over random Gaussian pairs.
double adjoint_mismatch(const ImplicitMatrix& op, int trials, std::uint64_t seed);

}  // namespace seqtf::linalg
