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

#include <array>
#include <utility>

#include "omheat/fock_algebra.hpp"
#include "omheat/model_params.hpp"

namespace omheat {

/// First and second moments of the photon number and the mechanical
/// quadratures q = b + b†, p = i(b† - b). Central correlations
/// ⟨A,B⟩ = ⟨AB⟩ - ⟨A⟩⟨B⟩ and raw moments are both carried.
struct MomentState {
  double mean_nc = 0.0;
  double mean_p = 0.0;
  double mean_q = 0.0;
  double var_nc = 0.0;
  double corr_nc_p = 0.0;
  double corr_nc_q = 0.0;
  double mean_nm = 0.0;
  double mom_nc_p = 0.0;
  double mom_nc_q = 0.0;
  double mom_nc2 = 0.0;

  static constexpr std::size_t size = 10;
  std::array<double, size> to_array() const;
  static MomentState from_array(const std::array<double, size>& v);
};

enum class ModelTag { sme, dsme };

/// α used by the moment equations: 0 for the local model, g/ω_m otherwise.
double oracle_alpha(const PhysicalParams& params, ModelTag model);

MomentState moment_rhs(const MomentState& state, const PhysicalParams& params, ModelTag model);

MomentState moment_steady_state(const PhysicalParams& params, ModelTag model);

struct HeatPair {
  double J_c = 0.0;
  double J_m = 0.0;
};

/// Steady-state currents g κ_c ⟨n_c, q⟩ and its negative.
HeatPair heat_currents_closed(const PhysicalParams& params, ModelTag model);

/// Currents for an arbitrary moment state (not necessarily steady).
HeatPair heat_currents(const MomentState& state, const PhysicalParams& params, ModelTag model);

/// ξ^ss = g κ_c ⟨n_c, q⟩^ss (1/T_m - 1/T_c), temperatures reduced.
double entropy_rate_closed(const PhysicalParams& params, ModelTag model);

struct MomentIntegration {
  double rtol = 1e-12;
  double atol = 1e-14;
  double initial_step = 1e-2;
};

/// Integrates the moment equations from t = 0 to t_end.
MomentState integrate_moments(const MomentState& initial, const PhysicalParams& params, ModelTag model,
                              double t_end, const MomentIntegration& options = {});

/// Reads the ten moments off a joint density matrix.
MomentState measure_moments(const ComplexMatrix& rho, const SystemDims& dims);

}  // namespace omheat
