#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "lambdaphase/scenario.hpp"
#include "lambdaphase/verify.hpp"

using namespace lambdaphase;

namespace {

const char* kFullConfig = R"({
  "g_a": 1.0, "g_b": 0.5, "nbar_a": 4.0, "nbar_b": 1.0,
  "c": [0.6, [0.0, 0.8], 0],
  "tau_max": 1.5, "tau_steps": 31, "delta_b": 0.1
})";

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("full config parses with complex amplitudes") {
  const RunConfig c = parse_config(kFullConfig);
  CHECK(c.params.g_b == 0.5);
  CHECK(c.params.c[1] == Complex(0.0, 0.8));
  CHECK(c.params.delta_b == 0.1);
  CHECK(c.tau_steps == 31);
  CHECK(c.transitions.size() == 3);
}

TEST_CASE("config errors name the field") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"g_a": 1})"), doctest::Contains("g_b"), std::invalid_argument);
  const RunConfig base = preset_config("fig2");
  CHECK_THROWS_WITH_AS(parse_config(R"({"nbar_c": 1})", &base), doctest::Contains("nbar_c"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"tau_steps": 1})", &base), doctest::Contains("tau_steps"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"tau_max": -2})", &base), doctest::Contains("tau_max"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"c": [1, 1, 0]})", &base), doctest::Contains("c"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"transitions": ["31"]})", &base), doctest::Contains("transitions"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"g_a": "one"})", &base), doctest::Contains("g_a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("{not json", &base), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("[1, 2]", &base), std::invalid_argument);
}

TEST_CASE("partial config overrides a preset") {
  const RunConfig base = preset_config("fig3b");
  const RunConfig c = parse_config(R"({"tau_steps": 11, "transitions": ["23", 13]})", &base);
  CHECK(c.params.nbar_a == 50.0);
  CHECK(c.tau_steps == 11);
  CHECK(c.wants(Transition::k13));
  CHECK_FALSE(c.wants(Transition::k12));
  CHECK(csv_columns(c) == std::vector<std::string>{"tau", "p13_0", "p13_p", "p13_m", "p23_0", "p23_p", "p23_m",
                                                   "pop1", "pop2", "pop3", "norm"});
}

TEST_CASE("presets") {
  CHECK(preset_config("fig2").params.nbar_b == 1.0);
  CHECK(preset_config("fig3a").params.nbar_b == 0.5);
  CHECK(preset_config("fig4").params.c[1].real() < 0.0);
  CHECK_THROWS_AS(preset_config("fig5"), std::invalid_argument);
}

TEST_CASE("rescaled time") {
  SystemParams p;
  p.g_a = 2.0;
  p.nbar_a = 25.0;
  // tau = g t / (2 pi sqrt(nbar)) -> t = tau 2 pi 5 / 2
  CHECK(time_from_tau(p, 1.0) == doctest::Approx(5.0 * std::numbers::pi));
  p.nbar_a = 0.0;
  CHECK(time_from_tau(p, 1.0) == doctest::Approx(std::numbers::pi));
  RunConfig c;
  c.tau_max = 2.0;
  c.tau_steps = 5;
  CHECK(tau_grid(c) == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
}

TEST_CASE("number formatting uses 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1e-30) == "1.0000000000000001e-30");
  CHECK(std::stod(format_number(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("CSV layout and row invariants") {
  RunConfig c = parse_config(kFullConfig);
  const TimeSeries s = run_scenario(c);
  const std::string text = csv_text(s);
  std::stringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "tau,p13_0,p13_p,p13_m,p23_0,p23_p,p23_m,p12_0,p12_p,p12_m,pop1,pop2,pop3,norm");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(split_line(line).size() == 14);
    ++rows;
  }
  CHECK(rows == 31);
  const RowDefects d = row_defects(s);
  CHECK(d.probability_sum < 1e-9);
  CHECK(d.norm < 1e-9);
  CHECK(d.population_identity < 1e-9);
}

TEST_CASE("zero couplings give constant columns") {
  RunConfig c = parse_config(kFullConfig);
  c.params.g_a = c.params.g_b = 0.0;
  c.params.delta_a = c.params.delta_b = 0.0;
  const TimeSeries s = run_scenario(c);
  for (const Observables& row : s.rows) {
    for (std::size_t t = 0; t < 3; ++t)
      for (std::size_t r = 0; r < 3; ++r)
        CHECK(row.distributions[t].p[r] == doctest::Approx(s.rows[0].distributions[t].p[r]).epsilon(1e-14));
    CHECK(row.populations[0] == doctest::Approx(0.36));
  }
}

TEST_CASE("CSV output is byte-identical across runs and execution modes") {
  RunConfig c = preset_config("fig2");
  c.tau_steps = 101;
  const std::string a = csv_text(run_scenario(c, Execution::kParallel));
  const std::string b = csv_text(run_scenario(c, Execution::kParallel));
  const std::string serial = csv_text(run_scenario(c, Execution::kSerial));
  CHECK(a == b);
  CHECK(a == serial);
}

TEST_CASE("files are written and unwritable paths are reported") {
  const auto dir = std::filesystem::temp_directory_path() / "lambdaphase_test_scenario";
  std::filesystem::create_directories(dir);
  RunConfig c = preset_config("fig2");
  c.tau_steps = 21;
  c.csv_path = (dir / "out.csv").string();
  c.svg_path = (dir / "out.svg").string();
  run_scenario(c);
  std::ifstream svg(c.svg_path);
  std::stringstream text;
  text << svg.rdbuf();
  const std::string s = text.str();
  CHECK(s.rfind("<svg", 0) == 0);
  std::size_t polylines = 0;
  for (std::size_t pos = s.find("<polyline"); pos != std::string::npos; pos = s.find("<polyline", pos + 1)) ++polylines;
  CHECK(polylines == 12);
  CHECK(std::filesystem::file_size(c.csv_path) > 0);

  c.csv_path = (dir / "missing_dir" / "out.csv").string();
  CHECK_THROWS_AS(run_scenario(c), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify suites") {
  for (std::string_view suite : {"algebra", "relphase"}) {
    const auto results = run_suite(suite);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) CHECK_MESSAGE(r.passed, r.name);
  }
  CHECK_THROWS_AS(run_suite("everything"), std::invalid_argument);
}
