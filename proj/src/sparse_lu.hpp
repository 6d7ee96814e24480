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

// Sparse LU backend shared by the steady-state solve and the implicit
// integrator. UMFPACK is much faster on the fill-heavy Liouvillian blocks; the
// built-in SparseLU is the fallback when SuiteSparse is not available.

#include <string>

#include "omheat/superoperator.hpp"

#ifdef OMHEAT_HAVE_UMFPACK
#include <Eigen/UmfPackSupport>
#else
#include <Eigen/SparseLU>
#endif

namespace omheat::detail {

#ifdef OMHEAT_HAVE_UMFPACK
using SparseLu = Eigen::UmfPackLU<Superoperator>;
inline std::string lu_message(const SparseLu& lu) {
  const int status = lu.umfpackFactorizeReturncode();
  if (status == UMFPACK_ERROR_out_of_memory) return "UMFPACK ran out of memory";
  if (status == UMFPACK_WARNING_singular_matrix) return "UMFPACK reports a singular matrix";
  return "UMFPACK factorization failed with status " + std::to_string(status);
}
inline bool lu_out_of_memory(const SparseLu& lu) {
  return lu.umfpackFactorizeReturncode() == UMFPACK_ERROR_out_of_memory;
}
#else
using SparseLu = Eigen::SparseLU<Superoperator, Eigen::COLAMDOrdering<int>>;
inline std::string lu_message(SparseLu& lu) { return lu.lastErrorMessage(); }
inline bool lu_out_of_memory(const SparseLu&) { return false; }
#endif

}  // namespace omheat::detail
