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

// Command-line front end: coupling sweeps, self-checks and scenario listing.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

#include "omheat/config.hpp"
#include "omheat/csv.hpp"
#include "omheat/errors.hpp"
#include "omheat/selfcheck.hpp"
#include "omheat/sweep.hpp"
#include "omheat/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

int cmd_run(const std::string& config_path, const std::string& out_path) {
  omheat::RunConfig config;
  try {
    config = omheat::load_config(config_path);
  } catch (const omheat::ConfigError& e) {
    std::cerr << "omheat: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!out_path.empty()) config.output = out_path;

  const auto rows = omheat::run_sweep(config);
  std::size_t failures = 0;
  for (const auto& row : rows) {
    if (!row.converged) {
      ++failures;
      std::cerr << "omheat: g=" << omheat::format_double(row.g) << " failed: " << row.error << '\n';
    }
  }
  try {
    omheat::emit_csv(rows, config.output, omheat::describe(config));
  } catch (const omheat::Error& e) {
    std::cerr << "omheat: " << e.what() << '\n';
    return kExitSolver;
  }
  std::cerr << "omheat: wrote " << rows.size() << " rows to " << config.output << " (" << failures
            << " failed)\n";
  return failures == rows.size() ? kExitSolver : kExitOk;
}

int cmd_selfcheck(const std::string& config_path) {
  omheat::RunConfig config;
  try {
    config = omheat::load_config(config_path);
  } catch (const omheat::ConfigError& e) {
    std::cerr << "omheat: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const auto report = omheat::run_selfcheck(config);
  report.print(std::cout);
  return report.ok() ? kExitOk : kExitSolver;
}

int cmd_scenarios() {
  for (const auto& s : omheat::scenarios()) {
    if (s.name == "custom") {
      std::printf("%-8s %s\n", s.name.c_str(), s.description.c_str());
    } else {
      std::printf("%-8s T_c=%g mK  T_m=%g mK  %s\n", s.name.c_str(), s.T_c_mK, s.T_m_mK,
                  s.description.c_str());
    }
  }
  std::printf("presets share omega_c/2pi=10 GHz, omega_m=0.06, kappa_c=0.02, kappa_m=0.005\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat currents and entropy production in optomechanics"};
  app.set_version_flag("--version", std::string(omheat::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  auto* run = app.add_subcommand("run", "Sweep the coupling g and write a CSV");
  run->add_option("--config", config_path, "Configuration file")->required();
  run->add_option("--out", out_path, "Output CSV (overrides 'output' in the config)");

  std::string check_path;
  auto* check = app.add_subcommand("selfcheck", "Cross-check against closed forms and the laws");
  check->add_option("--config", check_path, "Configuration file")->required();

  auto* list = app.add_subcommand("scenarios", "List temperature presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, out_path);
    if (*check) return cmd_selfcheck(check_path);
    if (*list) return cmd_scenarios();
  } catch (const omheat::Error& e) {
    std::cerr << "omheat: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitOk;
}
