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

#include <numbers>
#include <optional>

#include "omheat/fock_algebra.hpp"

namespace omheat {

/// CODATA 2018 exact values.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J / K
}  // namespace constants

/// Model constants in reduced units: ħ = k_B = 1 and every frequency or rate
/// is a multiple of the optical frequency ω_c. Only temperatures (kelvin) and
/// `omega_c_phys` (rad/s) carry SI units; they meet through the ratio
/// ħ ω ω_c_phys / (k_B T).
///
/// Heat currents come out in units of ħ ω_c², entropy rates in k_B ω_c.
struct PhysicalParams {
  double omega_c_phys = 2.0 * std::numbers::pi * 10e9;
  double omega_m = 0.06;
  double g = 0.0;
  double kappa_c = 0.02;
  double kappa_m = 0.005;
  double T_c = 0.106;
  double T_m = 0.101;
  /// Replaces the default zero-frequency mechanical noise coefficient G_m(0).
  std::optional<double> g_m_zero_override;

  double alpha() const { return g / omega_m; }
  /// κ = κ_c + κ_m / 2, the decay rate of photon-phonon correlations.
  double kappa() const { return kappa_c + 0.5 * kappa_m; }

  void validate() const;
};

/// k_B T / (ħ ω_c_phys): temperature in reduced units.
double reduced_temperature(double T, double omega_c_phys);

/// Bose-Einstein occupation of a bath mode at reduced frequency `omega`.
/// Returns 0 at T = 0.
double bose_einstein(double omega, double T, double omega_c_phys);

/// Ohmic-flat bath spectrum: κ(1 + n̄(|ω|)) for ω > 0 and κ n̄(|ω|) for ω < 0.
double spectral_g(double kappa, double omega_signed, double T, double omega_c_phys);

/// Zero-frequency mechanical noise G_m(0) used by the GME dephasing term.
/// Defaults to the classical-limit coefficient 4 κ_m k_B T_m / (ħ ω_m ω_c_phys),
/// which is the same coefficient the dressed-state dephasing uses.
double spectral_density_zero(const PhysicalParams& params);

/// Lab-frame H = ω_c n_c + ω_m b†b - g n_c (b + b†) with ω_c = 1.
ComplexMatrix hamiltonian(const PhysicalParams& params, const SystemDims& dims);

/// S = exp(-α n_c ⊗ (b† - b)).
ComplexMatrix polaron_unitary(const PhysicalParams& params, const SystemDims& dims);

/// H̃ = ω_c n_c + ω_m b̃†b̃ - (g²/ω_m) n_c², written in the Fock basis of the
/// transformed modes (so it is diagonal).
ComplexMatrix polaron_hamiltonian(const PhysicalParams& params, const SystemDims& dims);

/// Reduced heat current (ħ ω_c²) to watts.
double heat_current_to_si(double current, double omega_c_phys);
/// Reduced entropy rate (k_B ω_c) to W/K.
double entropy_rate_to_si(double rate, double omega_c_phys);

}  // namespace omheat
