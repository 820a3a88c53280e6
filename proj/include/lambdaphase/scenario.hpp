#pragma once

// Scenario runs over a rescaled-time grid: configuration, presets, CSV and
// SVG output.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lambdaphase/dynamics.hpp"
#include "lambdaphase/propagator.hpp"

namespace lambdaphase {

struct RunConfig {
  SystemParams params;
  double tau_max = 2.0;
  int tau_steps = 1001;
  /// Requested transitions; CSV columns keep the fixed 13, 23, 12 order.
  std::vector<Transition> transitions{Transition::k13, Transition::k23, Transition::k12};
  /// Empty: no file (the CLI then writes CSV to stdout).
  std::string csv_path;
  std::string svg_path;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  bool wants(Transition t) const;
};

inline constexpr std::string_view kPresetNames[] = {"fig2", "fig3a", "fig3b", "fig4"};

/// Built-in figure scenarios (zero detunings, unit couplings, tau in [0, 2]).
/// Throws std::invalid_argument for an unknown name.
RunConfig preset_config(std::string_view name);

/// Parses a JSON document. Keys: g_a, g_b, delta_a, delta_b, nbar_a, nbar_b,
/// c, epsilon, tau_max, tau_steps, transitions, csv, svg. Unknown keys are
/// rejected. With `base` the document may be partial and overrides it;
/// without, g_a, g_b, nbar_a, nbar_b, c, tau_max and tau_steps are required.
/// Errors are std::invalid_argument messages prefixed by the field name.
RunConfig parse_config(std::string_view json_text, const RunConfig* base = nullptr);
RunConfig load_config(const std::string& path, const RunConfig* base = nullptr);

/// tau = g_a t / (2 pi sqrt(nbar_a)); nbar_a = 0 and g_a = 0 count as 1.
double time_from_tau(const SystemParams& params, double tau);
std::vector<double> tau_grid(const RunConfig& config);

struct TimeSeries {
  RunConfig config;
  std::vector<double> tau;
  /// rows[k].time is the physical time of tau[k].
  std::vector<Observables> rows;
};

/// Evolves across the grid. Writes csv_path / svg_path when set
/// (std::runtime_error if a file cannot be written).
TimeSeries run_scenario(const RunConfig& config, Execution execution = Execution::kParallel);

std::vector<std::string> csv_columns(const RunConfig& config);
void write_csv(std::ostream& out, const TimeSeries& series);
std::string csv_text(const TimeSeries& series);
void write_svg(std::ostream& out, const TimeSeries& series);

/// General-format text with 17 significant digits.
std::string format_number(double value);

/// Largest violations of the per-row invariants.
struct RowDefects {
  double probability_sum = 0.0;  // |p0 + p+ + p- - 1|
  double norm = 0.0;             // |norm - 1|
  double population_identity = 0.0;  // |P(Phi_0) - population of the spectator level|
};
RowDefects row_defects(const TimeSeries& series);

}  // namespace lambdaphase
