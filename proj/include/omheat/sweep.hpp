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

#include <string>
#include <vector>

#include "omheat/config.hpp"

namespace omheat {

/// One steady state of the sweep. Currents are in ħω_c², ξ in k_B ω_c.
struct SweepRow {
  Model model = Model::sme;
  /// Highest sideband order for the global model, 0 otherwise.
  int sidebands = 0;
  double g = 0.0;
  int n_c = 0;
  int n_m = 0;
  double J_c = 0.0;
  double J_m = 0.0;
  double xi = 0.0;
  double first_law_residual = 0.0;
  double solver_residual = 0.0;
  bool converged = false;
  /// Why the point failed. Not part of the CSV.
  std::string error;

  bool operator==(const SweepRow& other) const;
};

/// Solves a single coupling value.
SweepRow solve_point(const RunConfig& config, double g);

/// Worker count from OMHEAT_THREADS, else the hardware concurrency.
int sweep_threads();

/// All points of config.g_sweep, in grid order. Failures become rows with
/// converged = false and zero values.
std::vector<SweepRow> run_sweep(const RunConfig& config);
std::vector<SweepRow> run_sweep(const RunConfig& config, int threads);

}  // namespace omheat
