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

#include "omheat/fock_algebra.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "omheat/errors.hpp"

namespace omheat {

void SystemDims::validate() const {
  if (n_c < 2 || n_m < 2) {
    throw InvalidDimension("cutoffs must be >= 2 (got n_c=" + std::to_string(n_c) +
                           ", n_m=" + std::to_string(n_m) + ")");
  }
}

ComplexMatrix annihilation(int dim) {
  if (dim < 2) {
    throw InvalidDimension("annihilation operator needs dim >= 2, got " + std::to_string(dim));
  }
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation(int dim) { return annihilation(dim).adjoint(); }

ComplexMatrix number_operator(int dim) {
  if (dim < 2) {
    throw InvalidDimension("number operator needs dim >= 2, got " + std::to_string(dim));
  }
  ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix optical(const ComplexMatrix& op, const SystemDims& dims) {
  if (op.rows() != dims.n_c) throw InvalidDimension("optical operator does not match n_c");
  return tensor(op, identity(dims.n_m));
}

ComplexMatrix mechanical(const ComplexMatrix& op, const SystemDims& dims) {
  if (op.rows() != dims.n_m) throw InvalidDimension("mechanical operator does not match n_m");
  return tensor(identity(dims.n_c), op);
}

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidDimension("matrix_exp needs a square matrix");
  if (!a.allFinite()) throw NumericError("matrix_exp: non-finite input");
  ComplexMatrix result = a.exp();
  if (!result.allFinite()) throw NumericError("matrix_exp: overflow");
  return result;
}

SparseOperator to_sparse(const ComplexMatrix& m) {
  // sparseView compares squared magnitudes, which underflow for tiny entries.
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      if (m(i, j) != Complex(0.0)) triplets.emplace_back(i, j, m(i, j));
    }
  }
  SparseOperator s(m.rows(), m.cols());
  s.setFromTriplets(triplets.begin(), triplets.end());
  s.makeCompressed();
  return s;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace omheat
