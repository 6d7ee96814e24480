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

#include "omheat/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "omheat/errors.hpp"
#include "omheat/version.hpp"

namespace omheat {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw NumericError("cannot format a double");
  return std::string(buf.data(), ptr);
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_field(const std::string& text, const std::filesystem::path& path, int line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": bad field '" + text + "'");
  }
  return v;
}

Model parse_model(const std::string& text, const std::filesystem::path& path, int line) {
  if (text == "sme") return Model::sme;
  if (text == "dsme") return Model::dsme;
  if (text == "gme") return Model::gme;
  throw IoError(path.string() + ":" + std::to_string(line) + ": unknown model '" + text + "'");
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path,
              std::string_view comment) {
  if (rows.empty()) throw InvalidParameters("refusing to write " + path.string() + ": no rows");
  std::ostringstream out;
  out << "# omheat " << kVersion << ' ' << comment << '\n' << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << to_string(r.model) << ',' << r.sidebands << ',' << format_double(r.g) << ',' << r.n_c << ','
        << r.n_m << ',' << format_double(r.J_c) << ',' << format_double(r.J_m) << ','
        << format_double(r.xi) << ',' << format_double(r.first_law_residual) << ','
        << format_double(r.solver_residual) << ',' << (r.converged ? "true" : "false") << '\n';
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << out.str();
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

std::vector<SweepRow> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<SweepRow> rows;
  std::string line;
  int number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw IoError(path.string() + ": unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto f = split(line);
    if (f.size() != 11) {
      throw IoError(path.string() + ":" + std::to_string(number) + ": expected 11 fields");
    }
    SweepRow r;
    r.model = parse_model(f[0], path, number);
    r.sidebands = parse_field<int>(f[1], path, number);
    r.g = parse_field<double>(f[2], path, number);
    r.n_c = parse_field<int>(f[3], path, number);
    r.n_m = parse_field<int>(f[4], path, number);
    r.J_c = parse_field<double>(f[5], path, number);
    r.J_m = parse_field<double>(f[6], path, number);
    r.xi = parse_field<double>(f[7], path, number);
    r.first_law_residual = parse_field<double>(f[8], path, number);
    r.solver_residual = parse_field<double>(f[9], path, number);
    if (f[10] == "true") r.converged = true;
    else if (f[10] == "false") r.converged = false;
    else throw IoError(path.string() + ":" + std::to_string(number) + ": bad converged flag");
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw IoError(path.string() + ": missing header");
  return rows;
}

}  // namespace omheat
