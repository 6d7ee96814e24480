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

#include "omheat/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "omheat/csv.hpp"
#include "omheat/errors.hpp"

namespace omheat {

std::vector<double> GSweep::values() const {
  std::vector<double> out;
  out.reserve(points);
  if (points == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < points; ++i) {
    if (spacing == GridSpacing::linear) {
      out.push_back(start + (stop - start) * i / (points - 1));
    } else {
      out.push_back(start * std::pow(stop / start, static_cast<double>(i) / (points - 1)));
    }
  }
  out.back() = stop;
  return out;
}

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> kScenarios = {
      {"fig2", 106.0, 101.0, "hot optical bath, cold mechanical bath"},
      {"fig3", 106.0, 106.0, "equal bath temperatures"},
      {"fig4", 101.0, 106.0, "cold optical bath, hot mechanical bath"},
      {"custom", 106.0, 101.0, "no preset; every value comes from the file or the defaults"},
  };
  return kScenarios;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& text, int line, const std::string& key) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a finite number, got '" + text + "'", line);
  }
  return v;
}

long long parse_integer(const std::string& text, int line, const std::string& key) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'", line);
  }
  return v;
}

bool parse_bool(const std::string& text, int line, const std::string& key) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'", line);
}

struct Entry {
  std::string value;
  int line = 0;
};

using Setter = std::function<void(RunConfig&, const Entry&, const std::string&)>;

double positive(double v, int line, const std::string& key) {
  if (!(v > 0.0)) throw ConfigError(key + " must be positive", line);
  return v;
}

double non_negative(double v, int line, const std::string& key) {
  if (!(v >= 0.0)) throw ConfigError(key + " must be non-negative", line);
  return v;
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> kSetters = {
      {"scenario", [](RunConfig&, const Entry&, const std::string&) {}},
      {"model",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         if (e.value == "sme") c.model = Model::sme;
         else if (e.value == "dsme") c.model = Model::dsme;
         else if (e.value == "gme") c.model = Model::gme;
         else throw ConfigError(k + ": expected sme, dsme or gme, got '" + e.value + "'", e.line);
       }},
      {"sidebands",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         const long long n = parse_integer(e.value, e.line, k);
         if (n != 2 && n != 4 && n != 6 && n != 8) {
           throw ConfigError(k + " must be one of 2, 4, 6, 8", e.line);
         }
         c.sidebands = static_cast<int>(n);
       }},
      {"omega_c_ghz",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.omega_c_phys =
             2.0 * std::numbers::pi * 1e9 * positive(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"omega_m",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.omega_m = positive(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"kappa_c",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.kappa_c = non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"kappa_m",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.kappa_m = non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"T_c_mK",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.T_c = 1e-3 * non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"T_m_mK",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.T_m = 1e-3 * non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"g_m_zero",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.params.g_m_zero_override = non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"g",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         const double g = non_negative(parse_real(e.value, e.line, k), e.line, k);
         c.g_sweep = {g, g, 1, GridSpacing::linear};
       }},
      {"g_start",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.g_sweep.start = non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"g_stop",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.g_sweep.stop = non_negative(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"g_points",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         const long long n = parse_integer(e.value, e.line, k);
         if (n < 1 || n > 100000) throw ConfigError(k + " must be between 1 and 100000", e.line);
         c.g_sweep.points = static_cast<int>(n);
       }},
      {"g_spacing",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         if (e.value == "linear") c.g_sweep.spacing = GridSpacing::linear;
         else if (e.value == "log") c.g_sweep.spacing = GridSpacing::log;
         else throw ConfigError(k + ": expected linear or log, got '" + e.value + "'", e.line);
       }},
      {"n_c",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         const long long n = parse_integer(e.value, e.line, k);
         if (n < 2 || n > 64) throw ConfigError(k + " must be between 2 and 64", e.line);
         c.dims.n_c = static_cast<int>(n);
       }},
      {"n_m",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         const long long n = parse_integer(e.value, e.line, k);
         if (n < 2 || n > 4096) throw ConfigError(k + " must be between 2 and 4096", e.line);
         c.dims.n_m = static_cast<int>(n);
       }},
      {"auto_converge",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.auto_converge = parse_bool(e.value, e.line, k);
       }},
      {"rel_tol",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.convergence.rel_tol = positive(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"memory_budget",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         const long long n = parse_integer(e.value, e.line, k);
         if (n < 1) throw ConfigError(k + " must be positive", e.line);
         c.convergence.memory_budget = static_cast<std::size_t>(n);
       }},
      {"residual_tol",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         c.convergence.solver.residual_tol = positive(parse_real(e.value, e.line, k), e.line, k);
       }},
      {"output",
       [](RunConfig& c, const Entry& e, const std::string& k) {
         if (e.value.empty()) throw ConfigError(k + " must not be empty", e.line);
         c.output = e.value;
       }},
  };
  return kSetters;
}

void apply_scenario(RunConfig& config, const Scenario& scenario) {
  config.scenario = scenario.name;
  if (scenario.name == "custom") return;
  const PhysicalParams defaults;
  config.params.omega_c_phys = defaults.omega_c_phys;
  config.params.omega_m = defaults.omega_m;
  config.params.kappa_c = defaults.kappa_c;
  config.params.kappa_m = defaults.kappa_m;
  config.params.T_c = 1e-3 * scenario.T_c_mK;
  config.params.T_m = 1e-3 * scenario.T_m_mK;
}

int line_of(const std::map<std::string, Entry>& entries, const char* key) {
  const auto it = entries.find(key);
  return it == entries.end() ? 0 : it->second.line;
}

}  // namespace

void RunConfig::validate() const {
  if (sidebands != 2 && sidebands != 4 && sidebands != 6 && sidebands != 8) {
    throw ConfigError("sidebands must be one of 2, 4, 6, 8");
  }
  if (!(g_sweep.start >= 0.0) || !(g_sweep.stop >= g_sweep.start)) {
    throw ConfigError("g sweep needs 0 <= g_start <= g_stop");
  }
  if (g_sweep.points < 1) throw ConfigError("g_points must be at least 1");
  if (g_sweep.spacing == GridSpacing::log && g_sweep.points > 1 && !(g_sweep.start > 0.0)) {
    throw ConfigError("log spacing needs g_start > 0");
  }
  try {
    PhysicalParams p = params;
    for (double g : g_sweep.values()) {
      p.g = g;
      p.validate();
    }
    dims.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(std::string_view(raw).substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line);
    if (!setters().contains(key)) throw ConfigError("unknown key '" + key + "'", line);
    if (entries.contains(key)) {
      throw ConfigError("duplicate key '" + key + "' (first set on line " +
                            std::to_string(entries[key].line) + ")",
                        line);
    }
    entries[key] = {value, line};
  }

  const bool single_g = entries.contains("g");
  for (const char* k : {"g_start", "g_stop", "g_points", "g_spacing"}) {
    if (single_g && entries.contains(k)) {
      throw ConfigError(std::string("'g' and '") + k + "' are mutually exclusive", line_of(entries, k));
    }
  }

  RunConfig config;
  if (const auto it = entries.find("scenario"); it != entries.end()) {
    const auto& all = scenarios();
    const auto match = std::find_if(all.begin(), all.end(),
                                    [&](const Scenario& s) { return s.name == it->second.value; });
    if (match == all.end()) {
      throw ConfigError("unknown scenario '" + it->second.value + "'", it->second.line);
    }
    apply_scenario(config, *match);
  }
  // Explicit keys always win over the preset.
  for (const auto& [key, entry] : entries) setters().at(key)(config, entry, key);

  try {
    config.validate();
  } catch (const ConfigError& e) {
    int where = 0;
    const std::string what = e.what();
    if (what.find("log spacing") != std::string::npos) where = line_of(entries, "g_spacing");
    else if (what.find("g sweep") != std::string::npos) where = line_of(entries, "g_stop");
    throw ConfigError(what, where);
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": ", e);
  }
}

std::string describe(const RunConfig& c) {
  std::ostringstream out;
  out << "scenario=" << c.scenario << " model=" << to_string(c.model);
  if (c.model == Model::gme) out << " sidebands=" << c.sidebands;
  out << " omega_c_ghz=" << format_double(c.params.omega_c_phys / (2.0 * std::numbers::pi * 1e9))
      << " omega_m=" << format_double(c.params.omega_m)
      << " kappa_c=" << format_double(c.params.kappa_c)
      << " kappa_m=" << format_double(c.params.kappa_m)
      << " T_c_mK=" << format_double(1e3 * c.params.T_c)
      << " T_m_mK=" << format_double(1e3 * c.params.T_m);
  if (c.params.g_m_zero_override) out << " g_m_zero=" << format_double(*c.params.g_m_zero_override);
  out << " g_start=" << format_double(c.g_sweep.start) << " g_stop=" << format_double(c.g_sweep.stop)
      << " g_points=" << c.g_sweep.points
      << " g_spacing=" << (c.g_sweep.spacing == GridSpacing::linear ? "linear" : "log")
      << " n_c=" << c.dims.n_c << " n_m=" << c.dims.n_m
      << " auto_converge=" << (c.auto_converge ? "true" : "false")
      << " rel_tol=" << format_double(c.convergence.rel_tol)
      << " memory_budget=" << c.convergence.memory_budget
      << " residual_tol=" << format_double(c.convergence.solver.residual_tol);
  return out.str();
}

}  // namespace omheat
