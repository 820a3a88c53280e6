// Command-line front end: simulate scenarios, run verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "lambdaphase/scenario.hpp"
#include "lambdaphase/verify.hpp"

namespace {

constexpr const char* kThreadsVariable = "LAMBDAPHASE_THREADS";

void apply_thread_override() {
  const char* text = std::getenv(kThreadsVariable);
  if (!text || !*text) return;
  char* end = nullptr;
  const long n = std::strtol(text, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096) {
    std::cerr << "warning: ignoring " << kThreadsVariable << "='" << text << "' (expected a positive integer)\n";
    return;
  }
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative-phase dynamics of a Lambda atom in two quantized modes"};
  app.require_subcommand(1);

  std::string config_path, out_path, svg_path, preset;
  auto* simulate = app.add_subcommand("simulate", "evolve a scenario over a tau grid and write CSV (and SVG)");
  simulate->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  simulate->add_option("--out", out_path, "CSV output path (default: stdout)");
  simulate->add_option("--svg", svg_path, "SVG plot output path");
  simulate->add_option("--preset", preset, "built-in scenario")->check(CLI::IsMember({"fig2", "fig3a", "fig3b", "fig4"}));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run invariant checks");
  verify->add_option("--suite", suite, "algebra, dynamics, relphase, oracle or all")->required();

  CLI11_PARSE(app, argc, argv);
  apply_thread_override();

  try {
    if (*simulate) {
      if (config_path.empty() && preset.empty()) {
        std::cerr << "simulate: give --config, --preset, or both\n";
        return 2;
      }
      std::optional<lambdaphase::RunConfig> base;
      if (!preset.empty()) base = lambdaphase::preset_config(preset);
      lambdaphase::RunConfig config =
          config_path.empty() ? *base : lambdaphase::load_config(config_path, base ? &*base : nullptr);
      if (!out_path.empty()) config.csv_path = out_path;
      if (!svg_path.empty()) config.svg_path = svg_path;
      const bool to_stdout = config.csv_path.empty();
      const auto series = lambdaphase::run_scenario(config);
      if (to_stdout) lambdaphase::write_csv(std::cout, series);
      return 0;
    }
    const auto results = lambdaphase::run_suite(suite);
    return lambdaphase::print_report(std::cout, results) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
