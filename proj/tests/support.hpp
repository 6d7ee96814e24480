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

// Shared helpers for the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <random>

#include "omheat/fock_algebra.hpp"
#include "omheat/steady_state.hpp"

namespace omheat::testing {

inline ComplexMatrix random_matrix(int dim, std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) m(i, j) = Complex(n(rng), n(rng));
  }
  return m;
}

/// Random full-rank density matrix G G† / Tr.
inline ComplexMatrix random_density(int dim, std::mt19937& rng) {
  const ComplexMatrix g = random_matrix(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

/// Random density matrix supported on photon numbers < pc and phonon
/// numbers < pm, so that a, a†, b, b† acting a couple of times never reach
/// the truncation edge.
inline ComplexMatrix random_low_density(const SystemDims& dims, int pc, int pm, std::mt19937& rng) {
  const ComplexMatrix small = random_density(pc * pm, rng);
  ComplexMatrix rho = ComplexMatrix::Zero(dims.joint(), dims.joint());
  auto index = [&](int k) { return (k / pm) * dims.n_m + (k % pm); };
  for (int j = 0; j < pc * pm; ++j) {
    for (int i = 0; i < pc * pm; ++i) rho(index(i), index(j)) = small(i, j);
  }
  return rho;
}

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

}  // namespace omheat::testing
