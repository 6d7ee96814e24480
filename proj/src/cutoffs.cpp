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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "omheat/errors.hpp"
#include "omheat/steady_state.hpp"
#include "omheat/thermo.hpp"

namespace omheat {

namespace {

std::size_t block_size(const SystemDims& dims) {
  return static_cast<std::size_t>(dims.n_c) * dims.n_m * dims.n_m;
}

double solve_current(const PhysicalParams& params, Model model, int sidebands, const SystemDims& dims,
                     const SolverOptions& solver) {
  const Generator gen = build_generator(params, dims, model, sidebands);
  const SteadyStateResult ss = steady_state(gen, solver);
  return heat_current(gen, ss.state, Bath::optical);
}

}  // namespace

CutoffResult converge_cutoffs(const PhysicalParams& params, Model model, int sidebands,
                              const SystemDims& start, const ConvergenceOptions& options) {
  if (!(options.rel_tol > 0.0)) throw InvalidParameters("rel_tol must be positive");
  if (!(options.growth_c >= 1.0) || !(options.growth_m > 1.0)) {
    throw InvalidParameters("cutoff growth factors must exceed 1");
  }
  start.validate();

  CutoffResult result;
  double last_delta = std::numeric_limits<double>::infinity();
  SystemDims dims = start;
  while (true) {
    if (block_size(dims) > options.memory_budget) {
      std::ostringstream msg;
      msg << "cutoffs n_c=" << dims.n_c << ", n_m=" << dims.n_m << " exceed the memory budget of "
          << options.memory_budget << " unknowns (last relative change " << last_delta << ")";
      throw BudgetExceeded(msg.str(), last_delta);
    }
    ConvergenceStep step{dims, solve_current(params, model, sidebands, dims, options.solver), 0.0};
    if (!result.trace.empty()) {
      const double prev = result.trace.back().J_c;
      step.delta = std::abs(step.J_c - prev) /
                   std::max({std::abs(step.J_c), std::abs(prev), options.current_floor});
      last_delta = step.delta;
    }
    result.trace.push_back(step);
    if (result.trace.size() >= 2 && step.delta < options.rel_tol) {
      result.dims = result.trace[result.trace.size() - 2].dims;
      return result;
    }
    SystemDims next;
    next.n_c = static_cast<int>(std::ceil(dims.n_c * options.growth_c));
    next.n_m = static_cast<int>(std::ceil(dims.n_m * options.growth_m));
    dims = next;
  }
}

}  // namespace omheat
