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

#include "omheat/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "omheat/analytic_oracle.hpp"
#include "omheat/errors.hpp"
#include "omheat/steady_state.hpp"
#include "omheat/thermo.hpp"

namespace omheat {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::expected_finding:
      return "EXPECTED";
  }
  return "?";
}

bool SelfcheckReport::ok() const { return count(CheckStatus::fail) == 0; }

std::size_t SelfcheckReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

void SelfcheckReport::print(std::ostream& out) const {
  for (const CheckEntry& e : entries) {
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-44s measured=%-12.4e tol=%-10.3e ",
                  std::string(to_string(e.status)).c_str(), e.name.c_str(), e.measured, e.tolerance);
    out << line << e.detail << '\n';
  }
  out << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, "
      << count(CheckStatus::expected_finding) << " expected findings\n";
}

namespace {

std::string label(Model model, int sidebands) {
  std::string s(to_string(model));
  if (model == Model::gme) s += std::to_string(sidebands);
  return s;
}

std::string at_g(double g) {
  std::ostringstream out;
  out << " g=" << g;
  return out.str();
}

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Solved {
  Generator gen;
  SteadyStateResult ss;
  ThermoReport report;
};

Solved solve(const RunConfig& config, const PhysicalParams& params, Model model,
             const SelfcheckOptions& options) {
  SystemDims dims = config.dims;
  if (config.auto_converge) {
    dims = converge_cutoffs(params, model, config.sidebands, config.dims, config.convergence).dims;
  }
  Generator gen = build_generator(params, dims, model, config.sidebands);
  if (options.corrupt) gen = options.corrupt(gen);
  SteadyStateResult ss = steady_state(gen, config.convergence.solver);
  ThermoOptions thermo_options;
  thermo_options.steady = !options.corrupt;
  ThermoReport report = entropy_production_rate(gen, ss.state, params, thermo_options);
  return {std::move(gen), std::move(ss), report};
}

void limit_check(const RunConfig& config, SelfcheckReport& report) {
  PhysicalParams p = config.params;
  p.g = 0.0;
  const SystemDims dims{3, 6};
  const Superoperator sme = build_sme(p, dims).total();
  for (Model model : {Model::dsme, Model::gme}) {
    const Superoperator other = build_generator(p, dims, model, config.sidebands).total();
    const double diff = Superoperator(other - sme).coeffs().cwiseAbs().maxCoeff();
    report.entries.push_back({"g=0 " + label(model, config.sidebands) + " equals sme",
                              diff == 0.0 ? CheckStatus::pass : CheckStatus::fail, diff, 0.0,
                              "entrywise generator difference"});
  }
}

void sign_checks(const RunConfig& config, Model model, double g, const ThermoReport& r,
                 SelfcheckReport& report) {
  const double t_c = config.params.T_c;
  const double t_m = config.params.T_m;
  const bool local = model != Model::gme;
  const std::string name = label(model, config.sidebands) + at_g(g);
  auto add = [&](const std::string& what, bool ok, double value, bool finding) {
    CheckStatus status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (ok && finding) status = CheckStatus::expected_finding;
    report.entries.push_back({what + " " + name, status, value, 0.0,
                              finding ? "local model departs from thermodynamics, as reported" : ""});
  };
  if (t_c > t_m) {
    add("J_c > 0", r.J_c > 0.0, r.J_c, false);
    add("xi >= 0", r.second_law_ok, r.xi, false);
  } else if (t_c == t_m) {
    if (local) {
      add("spurious J_c > 0", r.J_c > 0.0, r.J_c, true);
    } else {
      report.entries.push_back({"|J_c| <= 1e-8 " + name,
                                std::abs(r.J_c) <= 1e-8 ? CheckStatus::pass : CheckStatus::fail,
                                std::abs(r.J_c), 1e-8, "equal temperatures"});
    }
  } else {
    if (local) {
      add("J_c > 0 (cold to hot)", r.J_c > 0.0, r.J_c, true);
      add("xi < 0", r.xi < 0.0, r.xi, true);
    } else {
      add("J_c < 0", r.J_c < 0.0, r.J_c, false);
      add("xi > 0", r.xi > 0.0, r.xi, false);
    }
  }
}

}  // namespace

SelfcheckReport run_selfcheck(const RunConfig& config, const SelfcheckOptions& options) {
  config.validate();
  SelfcheckReport report;
  limit_check(config, report);

  const double oracle_tol = std::max(10.0 * config.convergence.rel_tol, 1e-6);
  for (double g : options.g_values) {
    PhysicalParams params = config.params;
    params.g = g;
    for (Model model : {Model::sme, Model::dsme, Model::gme}) {
      const std::string name = label(model, config.sidebands) + at_g(g);
      std::optional<Solved> solved;
      try {
        solved.emplace(solve(config, params, model, options));
      } catch (const Error& e) {
        report.entries.push_back({"solve " + name, CheckStatus::fail, 0.0, 0.0, e.what()});
        continue;
      }
      const Solved& s = *solved;
      std::ostringstream dims;
      dims << "n_c=" << s.gen.dims().n_c << " n_m=" << s.gen.dims().n_m;
      report.entries.push_back({"first law " + name,
                                first_law_check(s.report) ? CheckStatus::pass : CheckStatus::fail,
                                s.report.first_law_residual, kFirstLawTol, dims.str()});
      if (model != Model::sme) {
        const double dq = std::abs(dephasing_heat(s.gen, s.ss.state));
        report.entries.push_back({"dephasing heat " + name,
                                  dq < kDephasingHeatTol ? CheckStatus::pass : CheckStatus::fail, dq,
                                  kDephasingHeatTol, ""});
      }
      sign_checks(config, model, g, s.report, report);
      if (model == Model::gme) continue;

      const ModelTag tag = model == Model::sme ? ModelTag::sme : ModelTag::dsme;
      const HeatPair closed = heat_currents_closed(params, tag);
      const double dj = relative(s.report.J_c, closed.J_c);
      report.entries.push_back({"oracle J_c " + name, dj <= oracle_tol ? CheckStatus::pass : CheckStatus::fail,
                                dj, oracle_tol, "relative to closed form"});
      if (params.T_c != params.T_m) {
        const double dxi = relative(s.report.xi, entropy_rate_closed(params, tag));
        report.entries.push_back({"oracle xi " + name,
                                  dxi <= oracle_tol ? CheckStatus::pass : CheckStatus::fail, dxi,
                                  oracle_tol, "relative to closed form"});
      }
    }
  }
  return report;
}

}  // namespace omheat
