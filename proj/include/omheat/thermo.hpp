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

#include "omheat/generators.hpp"
#include "omheat/model_params.hpp"
#include "omheat/steady_state.hpp"

namespace omheat {

enum class Bath { optical, mechanical };

/// Currents smaller than this (ħ ω_c²) are treated as no flow when forming the
/// relative first-law residual.
inline constexpr double kCurrentFloor = 1e-10;
inline constexpr double kFirstLawTol = 1e-8;
/// Heat deposited by the dephasing part must vanish to this level.
inline constexpr double kDephasingHeatTol = 1e-10;
/// |dS/dt| allowed when a state is declared steady.
inline constexpr double kSteadyEntropyTol = 1e-9;

/// All heat currents in units of ħ ω_c², entropy rates in k_B ω_c.
struct ThermoReport {
  double J_c = 0.0;
  double J_m = 0.0;
  double xi = 0.0;
  double dSdt = 0.0;
  double first_law_residual = 0.0;
  bool second_law_ok = true;
};

/// J_x = Tr[(L_x ρ) H_frame] with H (lab) or H̃ (polaron). The dephasing
/// part's own contribution is evaluated and must be below kDephasingHeatTol.
double heat_current(const Generator& gen, const DensityMatrix& rho, Bath which);

/// Tr[(L_dephasing ρ) H_frame].
double dephasing_heat(const Generator& gen, const DensityMatrix& rho);

/// -Σ λ ln λ, ignoring eigenvalues below 1e-14.
double entropy_vn(const DensityMatrix& rho);
double entropy_vn(const ComplexMatrix& rho);

/// dS/dt = -Tr[(L ρ) ln ρ] along the flow of the full generator.
double entropy_rate(const Generator& gen, const DensityMatrix& rho);

/// |J_c + J_m| / max(|J_c|, |J_m|, kCurrentFloor).
double first_law_residual(double J_c, double J_m);

struct ThermoOptions {
  /// Treat ρ as a steady state: require |dS/dt| < kSteadyEntropyTol and report
  /// ξ = -(J_c/T_c + J_m/T_m).
  bool steady = false;
  /// second_law_ok is ξ ≥ -second_law_tol.
  double second_law_tol = 1e-13;
};

/// ξ = dS/dt - J_c/T_c - J_m/T_m with temperatures in units of ħ ω_c / k_B.
ThermoReport entropy_production_rate(const Generator& gen, const DensityMatrix& rho,
                                     const PhysicalParams& params, const ThermoOptions& options = {});

bool first_law_check(const ThermoReport& report);

}  // namespace omheat
