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

#include "omheat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <new>
#include <sstream>
#include <thread>

#include "omheat/errors.hpp"
#include "omheat/thermo.hpp"

namespace omheat {

bool SweepRow::operator==(const SweepRow& o) const {
  return model == o.model && sidebands == o.sidebands && g == o.g && n_c == o.n_c && n_m == o.n_m &&
         J_c == o.J_c && J_m == o.J_m && xi == o.xi && first_law_residual == o.first_law_residual &&
         solver_residual == o.solver_residual && converged == o.converged;
}

namespace {

SweepRow failed(SweepRow row, std::string why) {
  row.J_c = row.J_m = row.xi = row.first_law_residual = row.solver_residual = 0.0;
  row.converged = false;
  row.error = std::move(why);
  return row;
}

}  // namespace

SweepRow solve_point(const RunConfig& config, double g) {
  SweepRow row;
  row.model = config.model;
  row.sidebands = config.model == Model::gme ? config.sidebands : 0;
  row.g = g;
  row.n_c = config.dims.n_c;
  row.n_m = config.dims.n_m;
  try {
    PhysicalParams params = config.params;
    params.g = g;
    SystemDims dims = config.dims;
    if (config.auto_converge) {
      dims = converge_cutoffs(params, config.model, config.sidebands, config.dims, config.convergence).dims;
    }
    row.n_c = dims.n_c;
    row.n_m = dims.n_m;
    const Generator gen = build_generator(params, dims, config.model, config.sidebands);
    const SteadyStateResult ss = steady_state(gen, config.convergence.solver);
    ThermoOptions options;
    options.steady = true;
    const ThermoReport report = entropy_production_rate(gen, ss.state, params, options);
    row.J_c = report.J_c;
    row.J_m = report.J_m;
    row.xi = report.xi;
    row.first_law_residual = report.first_law_residual;
    row.solver_residual = ss.relative_residual;
    row.converged = first_law_check(report);
    if (!row.converged) {
      std::ostringstream msg;
      msg << "first-law residual " << report.first_law_residual << " above " << kFirstLawTol;
      row.error = msg.str();
    }
  } catch (const Error& e) {
    return failed(row, e.what());
  } catch (const std::bad_alloc&) {
    return failed(row, "out of memory");
  }
  return row;
}

int sweep_threads() {
  if (const char* env = std::getenv("OMHEAT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const RunConfig& config) { return run_sweep(config, sweep_threads()); }

std::vector<SweepRow> run_sweep(const RunConfig& config, int threads) {
  config.validate();
  const std::vector<double> grid = config.g_sweep.values();
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) rows[i] = solve_point(config, grid[i]);
  };
  const int count = std::clamp(threads, 1, static_cast<int>(grid.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

}  // namespace omheat
