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

#include "omheat/model_params.hpp"

#include <cmath>
#include <string>

#include "omheat/errors.hpp"

namespace omheat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters(what);
}

}  // namespace

void PhysicalParams::validate() const {
  require(std::isfinite(omega_c_phys) && omega_c_phys > 0.0, "omega_c_phys must be > 0");
  require(omega_m > 0.0 && omega_m < 1.0, "omega_m must lie in (0, 1)");
  require(std::isfinite(g) && g >= 0.0, "g must be >= 0");
  require(std::isfinite(kappa_c) && kappa_c > 0.0, "kappa_c must be > 0");
  require(std::isfinite(kappa_m) && kappa_m > 0.0, "kappa_m must be > 0");
  require(std::isfinite(T_c) && T_c >= 0.0, "T_c must be >= 0");
  require(std::isfinite(T_m) && T_m >= 0.0, "T_m must be >= 0");
  if (g_m_zero_override) {
    require(std::isfinite(*g_m_zero_override) && *g_m_zero_override >= 0.0,
            "g_m_zero override must be >= 0");
  }
}

double reduced_temperature(double T, double omega_c_phys) {
  return constants::k_B * T / (constants::hbar * omega_c_phys);
}

double bose_einstein(double omega, double T, double omega_c_phys) {
  if (!(omega > 0.0)) throw DomainError("bose_einstein: frequency must be > 0");
  if (!(T >= 0.0)) throw DomainError("bose_einstein: temperature must be >= 0");
  if (T == 0.0) return 0.0;
  const double x = constants::hbar * omega * omega_c_phys / (constants::k_B * T);
  return 1.0 / std::expm1(x);
}

double spectral_g(double kappa, double omega_signed, double T, double omega_c_phys) {
  if (omega_signed == 0.0) {
    throw DomainError("spectral_g: zero frequency, use spectral_density_zero");
  }
  const double occupation = bose_einstein(std::abs(omega_signed), T, omega_c_phys);
  return omega_signed > 0.0 ? kappa * (1.0 + occupation) : kappa * occupation;
}

double spectral_density_zero(const PhysicalParams& params) {
  if (params.g_m_zero_override) return *params.g_m_zero_override;
  return 4.0 * params.kappa_m * reduced_temperature(params.T_m, params.omega_c_phys) /
         params.omega_m;
}

ComplexMatrix hamiltonian(const PhysicalParams& params, const SystemDims& dims) {
  dims.validate();
  const ComplexMatrix n_c = optical(number_operator(dims.n_c), dims);
  const ComplexMatrix b = mechanical(annihilation(dims.n_m), dims);
  const ComplexMatrix n_m = mechanical(number_operator(dims.n_m), dims);
  const ComplexMatrix q = b + b.adjoint();
  return n_c + params.omega_m * n_m - params.g * (n_c * q);
}

ComplexMatrix polaron_unitary(const PhysicalParams& params, const SystemDims& dims) {
  dims.validate();
  const ComplexMatrix b = annihilation(dims.n_m);
  const ComplexMatrix generator =
      -params.alpha() * tensor(number_operator(dims.n_c), b.adjoint() - b);
  return matrix_exp(generator);
}

ComplexMatrix polaron_hamiltonian(const PhysicalParams& params, const SystemDims& dims) {
  dims.validate();
  const double kerr = params.g * params.g / params.omega_m;
  ComplexMatrix h = ComplexMatrix::Zero(dims.joint(), dims.joint());
  for (int k = 0; k < dims.joint(); ++k) {
    const double photons = dims.photon_of(k);
    const double phonons = dims.phonon_of(k);
    h(k, k) = photons + params.omega_m * phonons - kerr * photons * photons;
  }
  return h;
}

double heat_current_to_si(double current, double omega_c_phys) {
  return current * constants::hbar * omega_c_phys * omega_c_phys;
}

double entropy_rate_to_si(double rate, double omega_c_phys) {
  return rate * constants::k_B * omega_c_phys;
}

}  // namespace omheat
