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

#include "omheat/sweep.hpp"

namespace omheat {

inline constexpr std::string_view kCsvHeader =
    "model,sidebands,g,n_c,n_m,J_c,J_m,xi,first_law_residual,solver_residual,converged";

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Writes a '#' comment line (parameters and version), the header and one line
/// per row. Throws IoError naming the path, or InvalidParameters for no rows.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path,
              std::string_view comment);

/// Reads a file written by emit_csv. Throws IoError.
std::vector<SweepRow> parse_csv(const std::filesystem::path& path);

}  // namespace omheat
