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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "omheat/config.hpp"
#include "omheat/csv.hpp"
#include "omheat/errors.hpp"
#include "omheat/selfcheck.hpp"
#include "omheat/sweep.hpp"
#include "omheat/thermo.hpp"

using namespace omheat;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("omheat_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

int config_error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

// Small fixed cutoffs keep the sweep tests fast.
const char* kSmallSweep =
    "scenario = fig2\n"
    "model = gme\n"
    "sidebands = 2\n"
    "auto_converge = false\n"
    "n_c = 3\n"
    "n_m = 12\n"
    "g_start = 0\n"
    "g_stop = 0.06\n"
    "g_points = 4\n";

int run_cli(const std::string& args) {
  const std::string cmd = std::string(OMHEAT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("scenario presets") {
  const RunConfig c = parse_config("scenario = fig2\n");
  CHECK(c.params.T_c == doctest::Approx(0.106));
  CHECK(c.params.T_m == doctest::Approx(0.101));
  CHECK(c.params.kappa_c == 0.02);
  CHECK(c.params.kappa_m == 0.005);
  CHECK(c.params.omega_m == 0.06);
  CHECK(c.params.omega_c_phys == doctest::Approx(2.0 * M_PI * 1e10));
  CHECK(parse_config("scenario = fig3").params.T_m == doctest::Approx(0.106));
  const RunConfig fig4 = parse_config("scenario = fig4");
  CHECK(fig4.params.T_c == doctest::Approx(0.101));
  CHECK(fig4.params.T_m == doctest::Approx(0.106));

  // Explicit keys win over the preset regardless of order.
  const RunConfig over = parse_config("T_m_mK = 50\nscenario = fig2\n");
  CHECK(over.params.T_m == doctest::Approx(0.05));
  CHECK(over.params.T_c == doctest::Approx(0.106));

  const RunConfig custom = parse_config("scenario = custom\nT_c_mK = 106\nT_m_mK = 101\n");
  CHECK(custom.params.T_c == doctest::Approx(0.106));
  CHECK(custom.params.T_m == doctest::Approx(0.101));

  bool listed = false;
  for (const auto& s : scenarios()) listed = listed || s.name == "fig4";
  CHECK(listed);
}

TEST_CASE("config grammar") {
  const RunConfig c = parse_config(
      "# full example\n"
      "\n"
      "model = dsme   # trailing comment\n"
      "g_start = 0.01\n"
      "g_stop = 0.1\n"
      "g_points = 10\n"
      "g_spacing = log\n"
      "n_c = 5\n"
      "n_m = 40\n"
      "auto_converge = false\n"
      "rel_tol = 1e-5\n"
      "memory_budget = 123456\n"
      "residual_tol = 1e-11\n"
      "output = out.csv\n");
  CHECK(c.model == Model::dsme);
  CHECK(c.dims == SystemDims{5, 40});
  CHECK_FALSE(c.auto_converge);
  CHECK(c.convergence.rel_tol == 1e-5);
  CHECK(c.convergence.memory_budget == 123456);
  CHECK(c.convergence.solver.residual_tol == 1e-11);
  CHECK(c.output == "out.csv");
  const auto g = c.g_sweep.values();
  REQUIRE(g.size() == 10);
  CHECK(g.front() == 0.01);
  CHECK(g.back() == 0.1);
  CHECK(g[1] / g[0] == doctest::Approx(g[9] / g[8]));

  const RunConfig single = parse_config("g = 0.03\n");
  REQUIRE(single.g_sweep.values().size() == 1);
  CHECK(single.g_sweep.values()[0] == 0.03);

  const auto linear = parse_config("").g_sweep.values();
  REQUIRE(linear.size() == 21);
  CHECK(linear[0] == 0.0);
  CHECK(linear[1] == 0.005);
  CHECK(linear[2] == 0.01);
  CHECK(linear[20] == 0.1);
  CHECK(parse_config("").model == Model::gme);
  CHECK(parse_config("").sidebands == 4);
}

TEST_CASE("config errors carry line numbers") {
  CHECK(config_error_line("model = gme\nsidebands = 5\n") == 2);
  CHECK(config_error_line("model = gme\n\nbogus = 1\n") == 3);
  CHECK(config_error_line("scenario = fig9\n") == 1);
  CHECK(config_error_line("no equals sign here\n") == 1);
  CHECK(config_error_line("g = 0.1\ng = 0.2\n") == 2);
  CHECK(config_error_line("g = 0.1\ng_start = 0\n") == 2);
  CHECK(config_error_line("g_start = -0.1\n") == 1);
  CHECK(config_error_line("g_points = 0\n") == 1);
  CHECK(config_error_line("kappa_c = abc\n") == 1);
  CHECK(config_error_line("g_start = 0\ng_spacing = log\n") > 0);
  CHECK(config_error_line("model = local\n") == 1);
  CHECK(config_error_line("scenario = fig2\nmodel = sme\n") == -1);

  TempDir dir;
  CHECK_THROWS_AS(load_config(dir / "missing.cfg"), ConfigError);
  write_file(dir / "bad.cfg", "model = gme\nsidebands = 3\n");
  try {
    load_config(dir / "bad.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("bad.cfg") != std::string::npos);
  }
}

TEST_CASE("CSV emission and round trip") {
  TempDir dir;
  SweepRow a;
  a.model = Model::gme;
  a.sidebands = 4;
  a.g = 0.1 + 0.2;
  a.n_c = 6;
  a.n_m = 60;
  a.J_c = 1.0 / 3.0 * 1e-7;
  a.J_m = -a.J_c;
  a.xi = 2.5e-9;
  a.first_law_residual = 1.234567890123e-12;
  a.solver_residual = 3e-17;
  a.converged = true;
  SweepRow b = a;
  b.model = Model::sme;
  b.sidebands = 0;
  b.g = 0.0;
  b.J_c = 0.0;
  b.J_m = -0.0;
  b.converged = false;

  const fs::path path = dir / "rows.csv";
  emit_csv({a, b}, path, "unit test");
  const auto lines = read_lines(path);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].rfind("# omheat", 0) == 0);
  CHECK(lines[1] == kCsvHeader);
  CHECK(lines[3].rfind("sme,0,0,6,60,", 0) == 0);

  const auto back = parse_csv(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == a);
  CHECK(back[1] == b);
  CHECK(back[0].g == a.g);
  CHECK(back[0].J_c == a.J_c);
  CHECK(std::signbit(back[1].J_m));

  CHECK(format_double(1e-4) == "1e-04");
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(a.J_c)) == a.J_c);

  const fs::path empty = dir / "empty.csv";
  CHECK_THROWS_AS(emit_csv({}, empty, "none"), InvalidParameters);
  CHECK_FALSE(fs::exists(empty));
  CHECK_THROWS_AS(emit_csv({a}, dir / "no_such_dir" / "x.csv", "bad"), IoError);

  write_file(dir / "wrong.csv", "# c\nmodel,g\n");
  CHECK_THROWS_AS(parse_csv(dir / "wrong.csv"), IoError);
}

TEST_CASE("sweep rows are deterministic and ordered by g") {
  const RunConfig config = parse_config(kSmallSweep);
  const auto one = run_sweep(config, 1);
  const auto three = run_sweep(config, 3);
  REQUIRE(one.size() == 4);
  REQUIRE(three.size() == 4);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k] == three[k]);
    CHECK(one[k].J_c == three[k].J_c);
    CHECK(one[k].converged);
    CHECK(one[k].first_law_residual <= kFirstLawTol);
    CHECK(std::isfinite(one[k].xi));
    CHECK(one[k].sidebands == 2);
    CHECK(one[k].n_m == 12);
  }
  CHECK(one[0].g == 0.0);
  CHECK(std::abs(one[0].J_c) < 1e-10);
  CHECK(std::abs(one[0].J_m) < 1e-10);
  CHECK(std::abs(one[0].xi) < 1e-10);
  for (std::size_t k = 1; k < one.size(); ++k) {
    CHECK(one[k].g > one[k - 1].g);
    CHECK(one[k].J_c > 0.0);
  }
}

TEST_CASE("per-point failures are recorded without aborting") {
  RunConfig config = parse_config(kSmallSweep);
  config.convergence.solver.residual_tol = 0.0;
  config.convergence.solver.max_refinements = 0;
  const auto rows = run_sweep(config, 2);
  REQUIRE(rows.size() == 4);
  int failed = 0;
  for (const auto& row : rows) {
    if (!row.converged) {
      ++failed;
      CHECK_FALSE(row.error.empty());
      CHECK(row.J_c == 0.0);
    }
  }
  CHECK(failed > 0);
}

TEST_CASE("automatic cutoffs are recorded in the row") {
  RunConfig config = parse_config("scenario = fig2\nmodel = sme\ng = 0.02\nn_c = 3\nn_m = 10\nrel_tol = 1e-3\n");
  const SweepRow row = solve_point(config, 0.02);
  CHECK(row.converged);
  CHECK(row.n_m >= 10);
  CHECK(row.J_c > 0.0);
}

TEST_CASE("selfcheck") {
  RunConfig config = parse_config("scenario = fig2\nn_c = 5\nn_m = 60\nauto_converge = false\n");
  SUBCASE("fig2 passes") {
    const SelfcheckReport report = run_selfcheck(config);
    std::ostringstream out;
    report.print(out);
    CHECK_MESSAGE(report.ok(), out.str());
    CHECK(report.count(CheckStatus::fail) == 0);
    CHECK(report.count(CheckStatus::pass) > 10);
    CHECK(out.str().find("PASS") != std::string::npos);
  }
  SUBCASE("planted defect breaks the first law") {
    SelfcheckOptions opt;
    opt.g_values = {0.05};
    opt.corrupt = [](const Generator& gen) {
      JumpChannel extra = gen.channels(Part::optical_bath).front();
      extra.rate *= 0.5;
      return gen.with_untracked_channel(extra);
    };
    const SelfcheckReport report = run_selfcheck(config, opt);
    CHECK_FALSE(report.ok());
    bool first_law_failed = false;
    for (const auto& e : report.entries) {
      if (e.name.find("first law") != std::string::npos && e.status == CheckStatus::fail) {
        first_law_failed = true;
      }
    }
    CHECK(first_law_failed);
  }
  SUBCASE("fig4 reports local-model violations as expected findings") {
    config = parse_config("scenario = fig4\nn_c = 5\nn_m = 60\nauto_converge = false\n");
    SelfcheckOptions opt;
    opt.g_values = {0.05};
    const SelfcheckReport report = run_selfcheck(config, opt);
    std::ostringstream out;
    report.print(out);
    CHECK_MESSAGE(report.ok(), out.str());
    CHECK(report.count(CheckStatus::expected_finding) >= 2);
    CHECK(out.str().find("EXPECTED") != std::string::npos);
  }
}

TEST_CASE("command-line exit codes") {
  TempDir dir;
  write_file(dir / "ok.cfg", std::string(kSmallSweep) + "output = " + (dir / "out.csv").string() + "\n");
  write_file(dir / "bad.cfg", "sidebands = 5\n");
  write_file(dir / "fail.cfg",
             "scenario = fig2\nauto_converge = false\nn_c = 3\nn_m = 12\ng_start = 0.02\n"
             "g_stop = 0.06\ng_points = 2\nresidual_tol = 1e-300\n");

  CHECK(run_cli("--version") == 0);
  CHECK(run_cli("scenarios") == 0);
  CHECK(run_cli("") == 1);
  CHECK(run_cli("run") == 1);
  CHECK(run_cli("run --config " + (dir / "bad.cfg").string()) == 1);
  CHECK(run_cli("run --config " + (dir / "missing.cfg").string()) == 1);
  CHECK(run_cli("run --config " + (dir / "ok.cfg").string()) == 0);
  CHECK(parse_csv(dir / "out.csv").size() == 4);
  CHECK(run_cli("run --config " + (dir / "ok.cfg").string() + " --out " + (dir / "alt.csv").string()) == 0);
  CHECK(fs::exists(dir / "alt.csv"));
  CHECK(run_cli("run --config " + (dir / "fail.cfg").string() + " --out " + (dir / "f.csv").string()) ==
        2);
  CHECK(run_cli("selfcheck --config " + (dir / "bad.cfg").string()) == 1);
}
