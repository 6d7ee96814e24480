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

#include <cstddef>
#include <span>
#include <vector>

#include "omheat/generators.hpp"

namespace omheat {

/// Tolerances a physical state must meet.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativityTol = 1e-8;

struct DensityMatrix {
  ComplexMatrix rho;
  Frame frame = Frame::lab;
  /// Long double copy kept by the steady-state solver. Consumers use it only
  /// while it still rounds to rho exactly.
  ExtendedMatrix extended;

  int dim() const { return static_cast<int>(rho.rows()); }
  /// Throws InvalidState unless ρ is Hermitian, unit-trace and has no
  /// eigenvalue below -kNegativityTol.
  void validate() const;
  double min_eigenvalue() const;
  /// ⟨O⟩ = Tr(ρ O).
  Complex expect(const ComplexMatrix& op) const;
  /// True when `extended` is present and rounds to rho entry by entry.
  bool has_extended() const;
};

/// |ψ><ψ| for the joint Fock state |photons, phonons>.
DensityMatrix fock_state(const SystemDims& dims, int photons, int phonons, Frame frame = Frame::lab);

/// Product of thermal states with the given mean occupations.
DensityMatrix thermal_product(const SystemDims& dims, double nbar_c, double nbar_m,
                              Frame frame = Frame::lab);

/// ½ Σ|λ_i(ρ - σ)|.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

struct SolverOptions {
  /// Accept when ‖L vec ρ‖∞ ≤ residual_tol · ‖L‖∞.
  double residual_tol = 1e-9;
  /// Iterative-refinement sweeps with the residual accumulated in long double.
  int max_refinements = 8;
};

struct SteadyStateResult {
  DensityMatrix state;
  /// ‖L vec ρ‖∞ of the returned (rounded, Hermitized) state.
  double residual = 0.0;
  /// residual / ‖L‖∞.
  double relative_residual = 0.0;
  double min_eigenvalue = 0.0;
  int refinements = 0;
};

/// Solves L vec ρ = 0 with Tr ρ = 1 by replacing one row of the photon-diagonal
/// block of L with the trace functional. Every model conserves the
/// photon-coherence order, so a unique steady state has no photon coherences.
SteadyStateResult steady_state(const Generator& gen, const SolverOptions& options = {});

/// Eigenvalues of the photon-diagonal block of L, sorted by magnitude, for
/// kernel diagnostics. Dense; refuses blocks larger than `max_size`.
std::vector<Complex> smallest_eigenvalues(const Generator& gen, int count, int max_size = 2500);

/// Number of eigenvalues with |λ| ≤ tol · ‖L‖∞ in the photon-diagonal block.
int kernel_dimension(const Generator& gen, double tol = 1e-10, int max_size = 2500);

/// Adaptive integration controls shared by `evolve` and the moment ODEs.
struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-13;
  /// Smallest step, relative to max(1, |t|), before giving up as too stiff.
  double h_min = 1e-13;
  std::size_t max_steps = 200000;
};

struct EvolveResult {
  std::vector<DensityMatrix> states;
  /// Largest change of Tr ρ over one accepted step.
  double max_trace_drift = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

/// ρ(t) on `t_grid` (strictly increasing, starting at 0) by L-stable TR-BDF2
/// with step-doubling error control, one photon-coherence sector at a time.
EvolveResult evolve(const Generator& gen, const DensityMatrix& rho0, std::span<const double> t_grid,
                    const IntegratorOptions& options = {});

struct ConvergenceOptions {
  double rel_tol = 1e-4;
  /// Largest photon-diagonal block (n_c n_m² unknowns) the sweep may solve.
  std::size_t memory_budget = 400000;
  double growth_c = 1.25;
  double growth_m = 1.4;
  /// Currents below this magnitude count as zero when forming relative changes.
  double current_floor = 1e-12;
  SolverOptions solver;
};

struct ConvergenceStep {
  SystemDims dims;
  double J_c = 0.0;
  /// |ΔJ_c| / max(|J_c|, floor) against the previous step; 0 for the first.
  double delta = 0.0;
};

struct CutoffResult {
  SystemDims dims;
  std::vector<ConvergenceStep> trace;
};

/// Grows n_c and n_m geometrically until the steady-state optical heat current
/// changes by less than rel_tol, then returns the smaller of the last two dims.
CutoffResult converge_cutoffs(const PhysicalParams& params, Model model, int sidebands,
                              const SystemDims& start, const ConvergenceOptions& options);

}  // namespace omheat
