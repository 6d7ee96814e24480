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

#include "omheat/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "omheat/errors.hpp"
#include "sparse_lu.hpp"

namespace omheat {

void DensityMatrix::validate() const {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw InvalidState("density matrix must be square");
  if (!rho.allFinite()) throw InvalidState("density matrix has non-finite entries");
  const double herm = max_abs(rho - rho.adjoint());
  if (herm > kHermiticityTol) {
    throw InvalidState("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const double tr_err = std::abs(rho.trace() - Complex(1.0));
  if (tr_err > kTraceTol) {
    throw InvalidState("density matrix trace deviates from 1 by " + std::to_string(tr_err));
  }
  const double lmin = min_eigenvalue();
  if (lmin < -kNegativityTol) {
    throw InvalidState("density matrix has eigenvalue " + std::to_string(lmin));
  }
}

double DensityMatrix::min_eigenvalue() const {
  const ComplexMatrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

Complex DensityMatrix::expect(const ComplexMatrix& op) const {
  // Tr(ρ O) = Σ_ij ρ_ij O_ji
  return (rho.transpose().cwiseProduct(op)).sum();
}

bool DensityMatrix::has_extended() const {
  return extended.rows() == rho.rows() && extended.cols() == rho.cols() &&
         extended.cast<Complex>() == rho;
}

DensityMatrix fock_state(const SystemDims& dims, int photons, int phonons, Frame frame) {
  dims.validate();
  if (photons < 0 || photons >= dims.n_c || phonons < 0 || phonons >= dims.n_m) {
    throw InvalidDimension("Fock state outside the truncated space");
  }
  ComplexMatrix rho = ComplexMatrix::Zero(dims.joint(), dims.joint());
  const int k = photons * dims.n_m + phonons;
  rho(k, k) = 1.0;
  return {rho, frame, {}};
}

DensityMatrix thermal_product(const SystemDims& dims, double nbar_c, double nbar_m, Frame frame) {
  dims.validate();
  auto thermal = [](int dim, double nbar) {
    Eigen::VectorXd p(dim);
    for (int n = 0; n < dim; ++n) {
      p[n] = nbar == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::pow(nbar / (1.0 + nbar), n) / (1.0 + nbar);
    }
    return Eigen::VectorXd(p / p.sum());
  };
  const Eigen::VectorXd pc = thermal(dims.n_c, nbar_c);
  const Eigen::VectorXd pm = thermal(dims.n_m, nbar_m);
  ComplexMatrix rho = ComplexMatrix::Zero(dims.joint(), dims.joint());
  for (int c = 0; c < dims.n_c; ++c) {
    for (int m = 0; m < dims.n_m; ++m) rho(c * dims.n_m + m, c * dims.n_m + m) = pc[c] * pm[m];
  }
  return {rho, frame, {}};
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix diff = rho - sigma;
  const ComplexMatrix h = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
  return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

namespace {

template <typename Matrix>
double inf_norm(const Matrix& m) {
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(m.rows());
  for (int c = 0; c < m.outerSize(); ++c) {
    for (typename Matrix::InnerIterator it(m, c); it; ++it) {
      row_sums[it.row()] += static_cast<double>(std::abs(it.value()));
    }
  }
  return row_sums.size() == 0 ? 0.0 : row_sums.maxCoeff();
}

long double long_norm(const ExtendedVector& v) {
  long double m = 0.0L;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::string kernel_hint(const Generator& gen) {
  try {
    const int k = kernel_dimension(gen);
    return " (kernel dimension estimate " + std::to_string(k) + ")";
  } catch (const Error&) {
    return "";
  }
}

}  // namespace

SteadyStateResult steady_state(const Generator& gen, const SolverOptions& options) {
  const SystemDims& dims = gen.dims();
  const CoherenceSector sector = CoherenceSector::photon_order(dims, 0);
  // Heat currents are small differences of large gross flows, so the system
  // is assembled in long double and the double LU only drives refinement.
  const ExtendedSuperoperator liouvillian = gen.total_extended(sector);
  const int n = sector.size();
  const int d = dims.joint();

  // Replace the row of ρ_00 with the trace functional.
  const int trace_row = sector.index_of(0, 0);
  std::vector<Eigen::Triplet<LongComplex>> triplets;
  triplets.reserve(liouvillian.nonZeros() + d);
  for (int c = 0; c < liouvillian.outerSize(); ++c) {
    for (ExtendedSuperoperator::InnerIterator it(liouvillian, c); it; ++it) {
      if (it.row() != trace_row) triplets.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int i = 0; i < d; ++i) triplets.emplace_back(trace_row, sector.index_of(i, i), 1.0L);
  ExtendedSuperoperator system(n, n);
  system.setFromTriplets(triplets.begin(), triplets.end());
  system.makeCompressed();
  triplets = {};
  Superoperator rounded = system.cast<Complex>();
  rounded.makeCompressed();

  detail::SparseLu lu;
  lu.compute(rounded);
  if (lu.info() != Eigen::Success) {
    if (detail::lu_out_of_memory(lu)) {
      throw BudgetExceeded("steady-state factorization of " + std::to_string(n) +
                               " unknowns: " + detail::lu_message(lu),
                           std::numeric_limits<double>::quiet_NaN());
    }
    throw DegenerateSteadyState("steady-state system is singular: " + detail::lu_message(lu) +
                                kernel_hint(gen));
  }

  ComplexVector rhs = ComplexVector::Zero(n);
  rhs[trace_row] = 1.0;
  const ComplexVector x0 = lu.solve(rhs);
  if (!x0.allFinite()) {
    throw DegenerateSteadyState("steady-state solve produced non-finite values" + kernel_hint(gen));
  }

  ExtendedVector x = x0.cast<LongComplex>();
  const ExtendedVector rhs_l = rhs.cast<LongComplex>();
  ExtendedVector r = rhs_l - system * x;
  long double last = long_norm(r);
  int refinements = 0;
  for (; refinements < options.max_refinements && last > 0.0L; ++refinements) {
    const ComplexVector correction = lu.solve(ComplexVector(r.cast<Complex>()));
    const ExtendedVector trial = x + correction.cast<LongComplex>();
    ExtendedVector trial_r = rhs_l - system * trial;
    const long double next = long_norm(trial_r);
    if (!(next < last)) break;
    x = trial;
    r = std::move(trial_r);
    last = next;
  }

  ExtendedMatrix rho_l = ExtendedMatrix::Zero(d, d);
  for (int k = 0; k < n; ++k) rho_l(sector.row_of(k), sector.col_of(k)) = x[k];
  rho_l = (0.5L * (rho_l + rho_l.adjoint())).eval();

  SteadyStateResult result;
  result.state.rho = rho_l.cast<Complex>();
  result.state.frame = gen.frame();
  result.state.extended = std::move(rho_l);
  result.refinements = refinements;
  ExtendedVector hermitized(n);
  for (int k = 0; k < n; ++k) hermitized[k] = result.state.extended(sector.row_of(k), sector.col_of(k));
  const double l_norm = inf_norm(liouvillian);
  result.residual = static_cast<double>(long_norm(liouvillian * hermitized));
  result.relative_residual = l_norm > 0.0 ? result.residual / l_norm : result.residual;
  if (!(result.relative_residual <= options.residual_tol)) {
    std::ostringstream msg;
    msg << "steady-state residual " << result.relative_residual << " exceeds tolerance "
        << options.residual_tol;
    throw NonConvergence(msg.str());
  }
  result.min_eigenvalue = result.state.min_eigenvalue();
  result.state.validate();
  return result;
}

std::vector<Complex> smallest_eigenvalues(const Generator& gen, int count, int max_size) {
  const CoherenceSector sector = CoherenceSector::photon_order(gen.dims(), 0);
  if (sector.size() > max_size) {
    throw BudgetExceeded("photon-diagonal block too large for dense eigen-analysis", 0.0);
  }
  const ComplexMatrix dense = ComplexMatrix(gen.total(sector));
  Eigen::ComplexEigenSolver<ComplexMatrix> eig(dense, false);
  std::vector<Complex> values(eig.eigenvalues().data(),
                              eig.eigenvalues().data() + eig.eigenvalues().size());
  std::sort(values.begin(), values.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  values.resize(std::min<std::size_t>(values.size(), static_cast<std::size_t>(count)));
  return values;
}

int kernel_dimension(const Generator& gen, double tol, int max_size) {
  const CoherenceSector sector = CoherenceSector::photon_order(gen.dims(), 0);
  const double scale = inf_norm(gen.total(sector));
  const auto values = smallest_eigenvalues(gen, sector.size(), max_size);
  return static_cast<int>(std::count_if(values.begin(), values.end(), [&](Complex v) {
    return std::abs(v) <= tol * std::max(scale, 1.0);
  }));
}

}  // namespace omheat
