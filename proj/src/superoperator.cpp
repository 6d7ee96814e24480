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

#include "omheat/superoperator.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "omheat/errors.hpp"

namespace omheat {

CoherenceSector::CoherenceSector(const SystemDims& dims, int order, bool all) : dims_(dims) {
  dims_.validate();
  const int d = dims_.joint();
  lookup_.assign(static_cast<std::size_t>(d) * d, -1);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      if (!all && dims_.photon_of(i) - dims_.photon_of(j) != order) continue;
      lookup_[i + d * j] = static_cast<int>(rows_.size());
      rows_.push_back(i);
      cols_.push_back(j);
    }
  }
}

CoherenceSector CoherenceSector::full(const SystemDims& dims) { return {dims, 0, true}; }

CoherenceSector CoherenceSector::photon_order(const SystemDims& dims, int order) {
  return {dims, order, false};
}

ComplexVector CoherenceSector::gather(const ComplexMatrix& rho) const {
  ComplexVector x(size());
  for (int k = 0; k < size(); ++k) x[k] = rho(rows_[k], cols_[k]);
  return x;
}

void CoherenceSector::scatter(const ComplexVector& x, ComplexMatrix& rho) const {
  for (int k = 0; k < size(); ++k) rho(rows_[k], cols_[k]) = x[k];
}

template <typename Scalar>
BasicAssembler<Scalar>::BasicAssembler(const CoherenceSector& sector) : sector_(sector) {}

template <typename Scalar>
int BasicAssembler<Scalar>::column(int i, int j) const {
  const int c = sector_.index_of(i, j);
  if (c < 0) {
    throw ConsistencyError("superoperator term maps outside its coherence sector at (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return c;
}

template <typename Scalar>
void BasicAssembler<Scalar>::add_left(const Operator& a, Scalar s) {
  for (int r = 0; r < sector_.size(); ++r) {
    const int i = sector_.row_of(r);
    const int j = sector_.col_of(r);
    for (typename Operator::InnerIterator it(a, i); it; ++it) {
      triplets_.emplace_back(r, column(static_cast<int>(it.col()), j), s * it.value());
    }
  }
}

template <typename Scalar>
void BasicAssembler<Scalar>::add_right(const Operator& b, Scalar s) {
  const Operator bt = b.transpose();
  for (int r = 0; r < sector_.size(); ++r) {
    const int i = sector_.row_of(r);
    const int j = sector_.col_of(r);
    for (typename Operator::InnerIterator it(bt, j); it; ++it) {
      triplets_.emplace_back(r, column(i, static_cast<int>(it.col())), s * it.value());
    }
  }
}

template <typename Scalar>
void BasicAssembler<Scalar>::add_sandwich(const Operator& o, double s) {
  using Real = typename Scalar::value_type;
  for (int r = 0; r < sector_.size(); ++r) {
    const int i = sector_.row_of(r);
    const int j = sector_.col_of(r);
    for (typename Operator::InnerIterator ik(o, i); ik; ++ik) {
      for (typename Operator::InnerIterator jl(o, j); jl; ++jl) {
        triplets_.emplace_back(r, column(static_cast<int>(ik.col()), static_cast<int>(jl.col())),
                               Real(s) * ik.value() * std::conj(jl.value()));
      }
    }
  }
}

template <typename Scalar>
void BasicAssembler<Scalar>::add_commutator(const Operator& h) {
  add_left(h, Scalar(0, -1));
  add_right(h, Scalar(0, 1));
}

template <typename Scalar>
void BasicAssembler<Scalar>::add_dissipator(const Operator& o, double rate) {
  using Real = typename Scalar::value_type;
  if (rate == 0.0) return;
  const Operator odo = Operator(o.adjoint() * o).pruned();
  add_sandwich(o, rate);
  add_left(odo, Scalar(Real(-0.5) * Real(rate)));
  add_right(odo, Scalar(Real(-0.5) * Real(rate)));
}

template <typename Scalar>
typename BasicAssembler<Scalar>::Matrix BasicAssembler<Scalar>::finish() {
  Matrix s(sector_.size(), sector_.size());
  s.setFromTriplets(triplets_.begin(), triplets_.end());
  triplets_.clear();
  triplets_.shrink_to_fit();
  s.makeCompressed();
  return s;
}

template class BasicAssembler<Complex>;
template class BasicAssembler<LongComplex>;

Superoperator dissipator_super(const ComplexMatrix& o) {
  const int d = static_cast<int>(o.rows());
  const SparseOperator op = to_sparse(o);
  const SparseOperator odo = (op.adjoint() * op).pruned();
  Superoperator eye(d, d);
  eye.setIdentity();
  Superoperator jump = Eigen::kroneckerProduct(Superoperator(op.conjugate()), Superoperator(op));
  Superoperator left = Eigen::kroneckerProduct(eye, Superoperator(odo));
  Superoperator right = Eigen::kroneckerProduct(Superoperator(odo.transpose()), eye);
  Superoperator s = jump - 0.5 * left - 0.5 * right;
  s.prune(Complex(0.0), 0.0);
  return s;
}

Superoperator commutator_super(const ComplexMatrix& h) {
  const int d = static_cast<int>(h.rows());
  const Superoperator hs = to_sparse(h);
  Superoperator eye(d, d);
  eye.setIdentity();
  Superoperator left = Eigen::kroneckerProduct(eye, hs);
  Superoperator right = Eigen::kroneckerProduct(Superoperator(hs.transpose()), eye);
  Superoperator s = Complex(0.0, -1.0) * left + Complex(0.0, 1.0) * right;
  s.prune(Complex(0.0), 0.0);
  return s;
}

ComplexVector vec(const ComplexMatrix& rho) {
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

ComplexMatrix unvec(const ComplexVector& v, int dim) {
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

}  // namespace omheat
