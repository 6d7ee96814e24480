// Copyright 2026 The omheat Authors
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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace omheat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
/// Operators on the joint Hilbert space, stored sparse for products.
using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Fock-space cutoffs. Photon states 0..n_c-1, phonon states 0..n_m-1.
/// The joint space is ordered optical ⊗ mechanical everywhere, so the joint
/// index of |p, m> is p * n_m + m.
struct SystemDims {
  int n_c = 6;
  int n_m = 25;

  int joint() const { return n_c * n_m; }
  int photon_of(int joint_index) const { return joint_index / n_m; }
  int phonon_of(int joint_index) const { return joint_index % n_m; }
  void validate() const;

  friend bool operator==(const SystemDims&, const SystemDims&) = default;
};

/// Truncated bosonic annihilation operator, <n-1|a|n> = sqrt(n).
ComplexMatrix annihilation(int dim);
ComplexMatrix creation(int dim);
ComplexMatrix number_operator(int dim);
ComplexMatrix identity(int dim);

/// Kronecker product with the first factor as the slow (outer) index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Lifts a single-mode operator into the joint space.
ComplexMatrix optical(const ComplexMatrix& op, const SystemDims& dims);
ComplexMatrix mechanical(const ComplexMatrix& op, const SystemDims& dims);

/// e^A by scaling and squaring with a Padé approximant.
ComplexMatrix matrix_exp(const ComplexMatrix& a);

SparseOperator to_sparse(const ComplexMatrix& m);

/// Commutator AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry; the norm used for "within tol" comparisons.
double max_abs(const ComplexMatrix& m);

}  // namespace omheat
