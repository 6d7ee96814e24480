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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "omheat/config.hpp"
#include "omheat/generators.hpp"

namespace omheat {

enum class CheckStatus { pass, fail, expected_finding };

std::string_view to_string(CheckStatus status);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SelfcheckReport {
  std::vector<CheckEntry> entries;

  /// No entry failed. Expected findings do not count as failures.
  bool ok() const;
  std::size_t count(CheckStatus status) const;
  void print(std::ostream& out) const;
};

struct SelfcheckOptions {
  std::vector<double> g_values = {0.01, 0.05};
  /// Applied to every generator before it is solved. Used to plant a known
  /// defect and confirm the checks catch it.
  std::function<Generator(const Generator&)> corrupt;
};

SelfcheckReport run_selfcheck(const RunConfig& config, const SelfcheckOptions& options = {});

}  // namespace omheat
