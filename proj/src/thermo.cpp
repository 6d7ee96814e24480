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

#include "omheat/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "omheat/errors.hpp"

namespace omheat {

namespace {

void check_frame(const Generator& gen, const DensityMatrix& rho) {
  if (rho.frame != gen.frame()) {
    throw FrameError("state is in the " + std::string(to_string(rho.frame)) +
                     " frame but the generator is in the " + std::string(to_string(gen.frame())) +
                     " frame");
  }
  if (rho.dim() != gen.dims().joint()) throw InvalidDimension("state does not match generator dims");
}

// Tr(ρ X) for sparse X.
Complex trace_product(const ComplexMatrix& rho, const SparseOperator& x) {
  Complex s = 0.0;
  for (int i = 0; i < x.outerSize(); ++i) {
    for (SparseOperator::InnerIterator it(x, i); it; ++it) s += it.value() * rho(it.col(), i);
  }
  return s;
}

long double trace_product(const ExtendedMatrix& rho, const ExtendedOperator& x) {
  LongComplex s = 0.0L;
  for (int i = 0; i < x.outerSize(); ++i) {
    for (ExtendedOperator::InnerIterator it(x, i); it; ++it) s += it.value() * rho(it.col(), i);
  }
  return s.real();
}

// Tr[(L_part ρ) H] = Tr[ρ L_part†(H)]. States from the steady-state solver
// carry a long double copy; using it keeps the first-law balance far below
// the gross flows through each bath.
double part_heat(const Generator& gen, const DensityMatrix& rho, Part part) {
  if (rho.has_extended()) {
    const ExtendedOperator h = gen.hamiltonian_sparse().cast<LongComplex>();
    return static_cast<double>(trace_product(rho.extended, gen.adjoint_apply_extended(part, h)));
  }
  return trace_product(rho.rho, gen.adjoint_apply(part, gen.hamiltonian_sparse())).real();
}

}  // namespace

double dephasing_heat(const Generator& gen, const DensityMatrix& rho) {
  check_frame(gen, rho);
  return part_heat(gen, rho, Part::dephasing);
}

double heat_current(const Generator& gen, const DensityMatrix& rho, Bath which) {
  check_frame(gen, rho);
  const double dephasing = part_heat(gen, rho, Part::dephasing);
  if (std::abs(dephasing) >= kDephasingHeatTol) {
    std::ostringstream msg;
    msg << "dephasing part carries heat " << dephasing;
    throw ConsistencyError(msg.str());
  }
  return part_heat(gen, rho, which == Bath::optical ? Part::optical_bath : Part::mechanical_bath);
}

double entropy_vn(const ComplexMatrix& rho) {
  const ComplexMatrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : eig.eigenvalues()) {
    if (lambda >= 1e-14) s -= lambda * std::log(lambda);
  }
  return s;
}

double entropy_vn(const DensityMatrix& rho) { return entropy_vn(rho.rho); }

double entropy_rate(const Generator& gen, const DensityMatrix& rho) {
  check_frame(gen, rho);
  const ComplexMatrix h = 0.5 * (rho.rho + rho.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  Eigen::VectorXd logs = eig.eigenvalues().unaryExpr([](double l) {
    return std::log(std::max(l, 1e-300));
  });
  const ComplexMatrix log_rho = eig.eigenvectors() * logs.asDiagonal() * eig.eigenvectors().adjoint();
  const ComplexMatrix flow = gen.apply_total(rho.rho);
  return -(flow.transpose().cwiseProduct(log_rho)).sum().real();
}

double first_law_residual(double J_c, double J_m) {
  return std::abs(J_c + J_m) / std::max({std::abs(J_c), std::abs(J_m), kCurrentFloor});
}

ThermoReport entropy_production_rate(const Generator& gen, const DensityMatrix& rho,
                                     const PhysicalParams& params, const ThermoOptions& options) {
  if (!(params.T_c > 0.0) || !(params.T_m > 0.0)) {
    throw DomainError("entropy production needs T_c > 0 and T_m > 0");
  }
  ThermoReport report;
  report.J_c = heat_current(gen, rho, Bath::optical);
  report.J_m = heat_current(gen, rho, Bath::mechanical);
  report.dSdt = entropy_rate(gen, rho);
  const double t_c = reduced_temperature(params.T_c, params.omega_c_phys);
  const double t_m = reduced_temperature(params.T_m, params.omega_c_phys);
  const double bath_term = report.J_c / t_c + report.J_m / t_m;
  if (options.steady) {
    if (std::abs(report.dSdt) >= kSteadyEntropyTol) {
      std::ostringstream msg;
      msg << "state declared steady but dS/dt = " << report.dSdt;
      throw ConsistencyError(msg.str());
    }
    report.xi = -bath_term;
  } else {
    report.xi = report.dSdt - bath_term;
  }
  report.first_law_residual = first_law_residual(report.J_c, report.J_m);
  report.second_law_ok = report.xi >= -options.second_law_tol;
  return report;
}

bool first_law_check(const ThermoReport& report) { return report.first_law_residual <= kFirstLawTol; }

}  // namespace omheat
