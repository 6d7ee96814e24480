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
#include <utility>
#include <vector>

#include "omheat/fock_algebra.hpp"

namespace omheat {

/// Superoperators act on column-major vectorized density matrices,
/// vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ).
using Superoperator = Eigen::SparseMatrix<Complex>;

using LongComplex = std::complex<long double>;
using ExtendedSuperoperator = Eigen::SparseMatrix<LongComplex>;
using ExtendedOperator = Eigen::SparseMatrix<LongComplex, Eigen::RowMajor>;
using ExtendedMatrix = Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;
using ExtendedVector = Eigen::Matrix<LongComplex, Eigen::Dynamic, 1>;

/// A subset of density-matrix coordinates (i, j) that the generators map into
/// itself. Every model here conserves the photon-coherence order
/// photon(i) - photon(j), so the Liouvillian is block diagonal over orders and
/// the steady state lives in order 0.
class CoherenceSector {
 public:
  /// All D² coordinates in column-major order, index = i + D j.
  static CoherenceSector full(const SystemDims& dims);
  /// Coordinates with photon(i) - photon(j) == order.
  static CoherenceSector photon_order(const SystemDims& dims, int order);

  const SystemDims& dims() const { return dims_; }
  int size() const { return static_cast<int>(rows_.size()); }
  int row_of(int k) const { return rows_[k]; }
  int col_of(int k) const { return cols_[k]; }
  /// Position of (i, j) in the sector, or -1.
  int index_of(int i, int j) const { return lookup_[i + dims_.joint() * j]; }

  ComplexVector gather(const ComplexMatrix& rho) const;
  /// Writes the sector entries of `x` into `rho`, leaving other entries untouched.
  void scatter(const ComplexVector& x, ComplexMatrix& rho) const;

 private:
  CoherenceSector(const SystemDims& dims, int order, bool all);

  SystemDims dims_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<int> lookup_;
};

/// Accumulates operator-level terms into a sparse superoperator restricted to a
/// sector. Throws ConsistencyError if a term leaks out of the sector.
/// Builds a sector superoperator from operator-level terms. The extended
/// instantiation carries long double arithmetic for quantities that are small
/// differences of large flows.
template <typename Scalar>
class BasicAssembler {
 public:
  using Matrix = Eigen::SparseMatrix<Scalar>;
  using Operator = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

  explicit BasicAssembler(const CoherenceSector& sector);

  /// ρ ↦ s A ρ
  void add_left(const Operator& a, Scalar s);
  /// ρ ↦ s ρ B
  void add_right(const Operator& b, Scalar s);
  /// ρ ↦ s o ρ o†
  void add_sandwich(const Operator& o, double s);
  /// ρ ↦ -i [H, ρ]
  void add_commutator(const Operator& h);
  /// ρ ↦ rate D[o] ρ
  void add_dissipator(const Operator& o, double rate);

  Matrix finish();

 private:
  int column(int i, int j) const;

  const CoherenceSector& sector_;
  std::vector<Eigen::Triplet<Scalar>> triplets_;
};

extern template class BasicAssembler<Complex>;
extern template class BasicAssembler<LongComplex>;

using SuperoperatorAssembler = BasicAssembler<Complex>;
using ExtendedAssembler = BasicAssembler<LongComplex>;

Superoperator dissipator_super(const ComplexMatrix& o);

/// -i[H, ·] on the full space via Kronecker products.
Superoperator commutator_super(const ComplexMatrix& h);

/// Column-major vec and its inverse.
ComplexVector vec(const ComplexMatrix& rho);
ComplexMatrix unvec(const ComplexVector& v, int dim);

}  // namespace omheat
