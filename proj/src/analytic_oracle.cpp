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

#include "omheat/analytic_oracle.hpp"

#include <boost/numeric/odeint.hpp>

#include "omheat/errors.hpp"

namespace omheat {

std::array<double, MomentState::size> MomentState::to_array() const {
  return {mean_nc, mean_p, mean_q, var_nc, corr_nc_p, corr_nc_q, mean_nm, mom_nc_p, mom_nc_q, mom_nc2};
}

MomentState MomentState::from_array(const std::array<double, size>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
}

double oracle_alpha(const PhysicalParams& params, ModelTag model) {
  return model == ModelTag::sme ? 0.0 : params.alpha();
}

namespace {

double nbar_c(const PhysicalParams& p) { return bose_einstein(1.0, p.T_c, p.omega_c_phys); }
double nbar_m(const PhysicalParams& p) { return bose_einstein(p.omega_m, p.T_m, p.omega_c_phys); }

}  // namespace

MomentState moment_rhs(const MomentState& s, const PhysicalParams& params, ModelTag model) {
  const double a = oracle_alpha(params, model);
  const double g = params.g;
  const double w = params.omega_m;
  const double kc = params.kappa_c;
  const double km = params.kappa_m;
  const double k = params.kappa();
  const double nc = nbar_c(params);
  const double nm = nbar_m(params);

  MomentState d;
  d.mean_nc = kc * (nc - s.mean_nc);
  d.mean_p = -w * s.mean_q - 0.5 * km * s.mean_p + 2.0 * g * s.mean_nc;
  d.mean_q = w * s.mean_p - 0.5 * km * s.mean_q + km * a * s.mean_nc;
  d.var_nc = kc * nc + (2.0 * kc * nc + kc) * s.mean_nc - 2.0 * kc * s.var_nc;
  d.corr_nc_p = -k * s.corr_nc_p - w * s.corr_nc_q + 2.0 * g * s.var_nc;
  d.corr_nc_q = -k * s.corr_nc_q + w * s.corr_nc_p + km * a * s.var_nc;
  d.mean_nm = -km * (s.mean_nm - nm) + g * (s.corr_nc_p + s.mean_nc * s.mean_p) +
              0.5 * km * a * (s.corr_nc_q + s.mean_nc * s.mean_q);
  d.mom_nc_p = -k * s.mom_nc_p - w * s.mom_nc_q + 2.0 * g * s.mom_nc2 + kc * nc * s.mean_p;
  d.mom_nc_q = -k * s.mom_nc_q + a * km * s.mom_nc2 + kc * nc * s.mean_q + w * s.mom_nc_p;
  d.mom_nc2 = kc * nc - 2.0 * kc * s.mom_nc2 + kc * (4.0 * nc + 1.0) * s.mean_nc;
  return d;
}

MomentState moment_steady_state(const PhysicalParams& params, ModelTag model) {
  const double a = oracle_alpha(params, model);
  const double g = params.g;
  const double w = params.omega_m;
  const double kc = params.kappa_c;
  const double km = params.kappa_m;
  const double k = params.kappa();
  const double nc = nbar_c(params);
  const double nm = nbar_m(params);
  const double quad = 4.0 * w * w + km * km;
  const double A = 1.0 / (k * k + w * w);

  MomentState s;
  s.mean_nc = nc;
  s.mean_q = (8.0 * g * w + 2.0 * a * km * km) / quad * s.mean_nc;
  s.mean_p = (4.0 * g * km - 4.0 * a * w * km) / quad * s.mean_nc;
  s.var_nc = nc * (nc + 1.0);
  // Fixed point of the ⟨n_c,p⟩ and ⟨n_c,q⟩ pair. The α = 0 value reduces to
  // 2gκ Var / (ω_m² + κ²).
  s.corr_nc_p = (2.0 * g * k - a * km * w) * A * s.var_nc;
  s.corr_nc_q = (2.0 * g * w + a * km * k) * A * s.var_nc;
  s.mom_nc2 = nc * (2.0 * nc + 1.0);
  s.mean_nm = nm + g / km * (s.corr_nc_p + s.mean_nc * s.mean_p) +
              0.5 * a * (s.corr_nc_q + s.mean_nc * s.mean_q);
  s.mom_nc_q = A * (kc * nc * (k * s.mean_q + w * s.mean_p) + (k * a * km + 2.0 * g * w) * s.mom_nc2);
  s.mom_nc_p = A * (kc * nc * (k * s.mean_p - w * s.mean_q) + (2.0 * k * g - a * km * w) * s.mom_nc2);
  return s;
}

HeatPair heat_currents_closed(const PhysicalParams& params, ModelTag model) {
  const double j = params.g * params.kappa_c * moment_steady_state(params, model).corr_nc_q;
  return {j, -j};
}

HeatPair heat_currents(const MomentState& s, const PhysicalParams& params, ModelTag model) {
  const double a = oracle_alpha(params, model);
  const double g = params.g;
  const double w = params.omega_m;
  const double kc = params.kappa_c;
  const double km = params.kappa_m;
  HeatPair j;
  j.J_c = kc * (1.0 - g * s.mean_q) * (nbar_c(params) - s.mean_nc) + g * kc * s.corr_nc_q;
  // Tr[(L_m ρ) H] for the jump operators b - α n_c, b† - α n_c with H
  // containing -g n_c q. Reduces to -J_c at the fixed point.
  j.J_m = w * km * (nbar_m(params) - s.mean_nm) + 0.5 * (w * a + g) * km * s.mom_nc_q -
          g * a * km * s.mom_nc2;
  return j;
}

double entropy_rate_closed(const PhysicalParams& params, ModelTag model) {
  if (!(params.T_c > 0.0) || !(params.T_m > 0.0)) {
    throw DomainError("entropy rate needs T_c > 0 and T_m > 0");
  }
  const double t_c = reduced_temperature(params.T_c, params.omega_c_phys);
  const double t_m = reduced_temperature(params.T_m, params.omega_c_phys);
  return heat_currents_closed(params, model).J_c * (1.0 / t_m - 1.0 / t_c);
}

MomentState integrate_moments(const MomentState& initial, const PhysicalParams& params, ModelTag model,
                              double t_end, const MomentIntegration& options) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, MomentState::size>;
  if (!(t_end >= 0.0)) throw DomainError("t_end must be non-negative");
  State y = initial.to_array();
  if (t_end == 0.0) return initial;
  auto system = [&](const State& x, State& dxdt, double) {
    dxdt = moment_rhs(MomentState::from_array(x), params, model).to_array();
  };
  auto stepper = ode::make_controlled(options.atol, options.rtol, ode::runge_kutta_dopri5<State>());
  ode::integrate_adaptive(stepper, system, y, 0.0, t_end, options.initial_step);
  return MomentState::from_array(y);
}

MomentState measure_moments(const ComplexMatrix& rho, const SystemDims& dims) {
  if (rho.rows() != dims.joint() || rho.cols() != dims.joint()) {
    throw InvalidDimension("state does not match dims");
  }
  const ComplexMatrix b = annihilation(dims.n_m);
  const ComplexMatrix n = optical(number_operator(dims.n_c), dims);
  const ComplexMatrix q = mechanical(b + b.adjoint(), dims);
  const ComplexMatrix p = mechanical(Complex(0.0, 1.0) * (b.adjoint() - b), dims);
  const ComplexMatrix nm = mechanical(number_operator(dims.n_m), dims);
  auto ex = [&](const ComplexMatrix& op) { return rho.transpose().cwiseProduct(op).sum().real(); };

  MomentState s;
  s.mean_nc = ex(n);
  s.mean_p = ex(p);
  s.mean_q = ex(q);
  s.mom_nc2 = ex(n * n);
  s.var_nc = s.mom_nc2 - s.mean_nc * s.mean_nc;
  s.mom_nc_p = ex(n * p);
  s.mom_nc_q = ex(n * q);
  s.corr_nc_p = s.mom_nc_p - s.mean_nc * s.mean_p;
  s.corr_nc_q = s.mom_nc_q - s.mean_nc * s.mean_q;
  s.mean_nm = ex(nm);
  return s;
}

}  // namespace omheat
