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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "omheat/generators.hpp"
#include "omheat/model_params.hpp"
#include "omheat/steady_state.hpp"

namespace omheat {

enum class GridSpacing { linear, log };

struct GSweep {
  double start = 0.0;
  double stop = 0.1;
  int points = 21;
  GridSpacing spacing = GridSpacing::linear;

  /// Grid values in increasing order; a single point yields {start}.
  std::vector<double> values() const;
};

/// Preset temperature scenarios. All share κ_c = 0.02, κ_m = 0.005,
/// ω_m = 0.06 and ω_c / 2π = 10 GHz.
struct Scenario {
  std::string name;
  double T_c_mK = 0.0;
  double T_m_mK = 0.0;
  std::string description;
};

const std::vector<Scenario>& scenarios();

struct RunConfig {
  std::string scenario = "custom";
  PhysicalParams params;
  Model model = Model::gme;
  int sidebands = 4;
  SystemDims dims;
  /// Grow the cutoffs per point until J_c settles; otherwise use dims as is.
  bool auto_converge = true;
  ConvergenceOptions convergence;
  GSweep g_sweep;
  std::string output = "omheat.csv";

  /// Throws ConfigError (line 0) on a violated invariant.
  void validate() const;
};

/// Parses the key = value grammar. Lines are numbered from 1 in errors.
RunConfig parse_config(std::string_view text);

/// Reads and parses a configuration file. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path);

/// Canonical one-line key=value summary used in CSV headers.
std::string describe(const RunConfig& config);

}  // namespace omheat
