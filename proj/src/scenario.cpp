#include "lambdaphase/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lambdaphase {
namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view field, const std::string& what) {
  throw std::invalid_argument("RunConfig." + std::string(field) + ": " + what);
}

double number_field(const json& value, std::string_view field) {
  if (!value.is_number()) fail(field, "expected a number");
  return value.get<double>();
}

Complex complex_field(const json& value, std::string_view field) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number())
    return {value[0].get<double>(), value[1].get<double>()};
  fail(field, "expected a number or a [re, im] pair");
}

constexpr std::string_view kRequiredWithoutBase[] = {"g_a", "g_b", "nbar_a", "nbar_b", "c", "tau_max", "tau_steps"};

struct Column {
  std::string name;
  std::vector<double> values;
};

std::vector<Column> value_columns(const TimeSeries& series) {
  std::vector<Column> cols;
  const auto& rows = series.rows;
  for (Transition t : kAllTransitions) {
    if (!series.config.wants(t)) continue;
    for (PhaseLabel label : kAllLabels) {
      Column col{"p" + std::string(to_string(t)) + "_" + std::string(to_string(label)), {}};
      col.values.reserve(rows.size());
      for (const auto& row : rows) col.values.push_back(row.distribution(t).p[static_cast<std::size_t>(label)]);
      cols.push_back(std::move(col));
    }
  }
  for (std::size_t level = 0; level < 3; ++level) {
    Column col{"pop" + std::to_string(level + 1), {}};
    for (const auto& row : rows) col.values.push_back(row.populations[level]);
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

void RunConfig::validate() const {
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("RunConfig.") + e.what());
  }
  if (!(std::isfinite(tau_max) && tau_max > 0.0)) fail("tau_max", "must be finite and > 0");
  if (tau_steps < 2) fail("tau_steps", "must be >= 2");
  if (transitions.empty()) fail("transitions", "at least one transition is required");
  for (std::size_t i = 0; i < transitions.size(); ++i)
    for (std::size_t j = i + 1; j < transitions.size(); ++j)
      if (transitions[i] == transitions[j]) fail("transitions", "duplicate entry");
}

bool RunConfig::wants(Transition t) const {
  return std::find(transitions.begin(), transitions.end(), t) != transitions.end();
}

RunConfig preset_config(std::string_view name) {
  RunConfig config;
  config.tau_max = 2.0;
  config.tau_steps = 1001;
  if (name == "fig2") {
    config.params.nbar_a = 1.0;
    config.params.nbar_b = 1.0;
    config.tau_steps = 401;
  } else if (name == "fig3a") {
    config.params.nbar_a = 50.0;
    config.params.nbar_b = 0.5;
  } else if (name == "fig3b") {
    config.params.nbar_a = 50.0;
    config.params.nbar_b = 50.0;
  } else if (name == "fig4") {
    config.params = trapping_config(std::numbers::pi, 50.0);
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected fig2, fig3a, fig3b or fig4)");
  }
  return config;
}

RunConfig parse_config(std::string_view json_text, const RunConfig* base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("RunConfig: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("RunConfig: top level must be a JSON object");

  if (!base)
    for (std::string_view key : kRequiredWithoutBase)
      if (!doc.contains(std::string(key))) fail(key, "required (no preset given)");

  RunConfig config = base ? *base : RunConfig{};
  SystemParams& p = config.params;
  for (const auto& [key, value] : doc.items()) {
    if (key == "g_a") {
      p.g_a = number_field(value, key);
    } else if (key == "g_b") {
      p.g_b = number_field(value, key);
    } else if (key == "delta_a") {
      p.delta_a = number_field(value, key);
    } else if (key == "delta_b") {
      p.delta_b = number_field(value, key);
    } else if (key == "nbar_a") {
      p.nbar_a = number_field(value, key);
    } else if (key == "nbar_b") {
      p.nbar_b = number_field(value, key);
    } else if (key == "epsilon") {
      p.epsilon = number_field(value, key);
    } else if (key == "c") {
      if (!value.is_array() || value.size() != 3) fail(key, "expected an array of three amplitudes");
      for (std::size_t k = 0; k < 3; ++k) p.c[k] = complex_field(value[k], "c[" + std::to_string(k) + "]");
    } else if (key == "tau_max") {
      config.tau_max = number_field(value, key);
    } else if (key == "tau_steps") {
      if (!value.is_number_integer()) fail(key, "expected an integer");
      config.tau_steps = value.get<int>();
    } else if (key == "transitions") {
      if (!value.is_array()) fail(key, "expected an array such as [\"13\", \"23\"]");
      config.transitions.clear();
      for (const auto& entry : value) {
        std::string text;
        if (entry.is_string())
          text = entry.get<std::string>();
        else if (entry.is_number_integer())
          text = std::to_string(entry.get<int>());
        else
          fail(key, "entries must be \"13\", \"23\" or \"12\"");
        try {
          config.transitions.push_back(parse_transition(text));
        } catch (const std::invalid_argument& e) {
          fail(key, e.what());
        }
      }
    } else if (key == "csv") {
      if (!value.is_string()) fail(key, "expected a path string");
      config.csv_path = value.get<std::string>();
    } else if (key == "svg") {
      if (!value.is_string()) fail(key, "expected a path string");
      config.svg_path = value.get<std::string>();
    } else {
      fail(key, "unknown key");
    }
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::string& path, const RunConfig* base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), base);
}

double time_from_tau(const SystemParams& params, double tau) {
  const double root = params.nbar_a > 0.0 ? std::sqrt(params.nbar_a) : 1.0;
  const double g = params.g_a > 0.0 ? params.g_a : 1.0;
  return tau * 2.0 * std::numbers::pi * root / g;
}

std::vector<double> tau_grid(const RunConfig& config) {
  std::vector<double> grid(static_cast<std::size_t>(config.tau_steps));
  const double step = config.tau_max / static_cast<double>(config.tau_steps - 1);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = static_cast<double>(k) * step;
  grid.back() = config.tau_max;
  return grid;
}

TimeSeries run_scenario(const RunConfig& config, Execution execution) {
  config.validate();
  TimeSeries series;
  series.config = config;
  series.tau = tau_grid(config);
  std::vector<double> times(series.tau.size());
  std::transform(series.tau.begin(), series.tau.end(), times.begin(),
                 [&](double tau) { return time_from_tau(config.params, tau); });

  const Propagator propagator(config.params);
  series.rows = observe_grid(propagator, times, execution);

  if (!config.csv_path.empty()) {
    std::ofstream out(config.csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV to '" + config.csv_path + "'");
    write_csv(out, series);
    if (!out) throw std::runtime_error("error while writing '" + config.csv_path + "'");
  }
  if (!config.svg_path.empty()) {
    std::ofstream out(config.svg_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write SVG to '" + config.svg_path + "'");
    write_svg(out, series);
    if (!out) throw std::runtime_error("error while writing '" + config.svg_path + "'");
  }
  return series;
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<std::string> csv_columns(const RunConfig& config) {
  std::vector<std::string> cols{"tau"};
  for (Transition t : kAllTransitions) {
    if (!config.wants(t)) continue;
    for (PhaseLabel label : kAllLabels)
      cols.push_back("p" + std::string(to_string(t)) + "_" + std::string(to_string(label)));
  }
  for (const char* name : {"pop1", "pop2", "pop3", "norm"}) cols.emplace_back(name);
  return cols;
}

void write_csv(std::ostream& out, const TimeSeries& series) {
  const auto cols = csv_columns(series.config);
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << '\n';
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    const Observables& row = series.rows[i];
    out << format_number(series.tau[i]);
    for (Transition t : kAllTransitions) {
      if (!series.config.wants(t)) continue;
      for (double p : row.distribution(t).p) out << ',' << format_number(p);
    }
    for (double pop : row.populations) out << ',' << format_number(pop);
    out << ',' << format_number(row.norm) << '\n';
  }
}

std::string csv_text(const TimeSeries& series) {
  std::ostringstream out;
  write_csv(out, series);
  return out.str();
}

void write_svg(std::ostream& out, const TimeSeries& series) {
  constexpr double width = 840, height = 480;
  constexpr double left = 60, right = 160, top = 20, bottom = 50;
  constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
  static constexpr const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                            "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

  const double tau_max = series.config.tau_max;
  auto x_of = [&](double tau) { return left + plot_w * tau / tau_max; };
  auto y_of = [&](double p) { return top + plot_h * (1.0 - std::clamp(p, 0.0, 1.0)); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double p = k / 4.0;
    out << "<text x=\"" << left - 8 << "\" y=\"" << y_of(p) + 4 << "\" text-anchor=\"end\">" << p << "</text>\n";
    const double tau = tau_max * k / 4.0;
    out << "<text x=\"" << x_of(tau) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">" << tau
        << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">tau</text>\n";

  const auto cols = value_columns(series);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const char* colour = palette[c % std::size(palette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < cols[c].values.size(); ++i)
      out << (i ? " " : "") << x_of(series.tau[i]) << ',' << y_of(cols[c].values[i]);
    out << "\"/>\n";
    const double ly = top + 12 + 16.0 * static_cast<double>(c);
    out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + plot_w + 32
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << colour << "\"/>\n";
    out << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly << "\">" << cols[c].name << "</text>\n";
  }
  out << "</svg>\n";
}

RowDefects row_defects(const TimeSeries& series) {
  RowDefects d;
  for (const Observables& row : series.rows) {
    d.norm = std::max(d.norm, std::abs(row.norm - 1.0));
    for (Transition t : kAllTransitions) {
      const PhaseDistribution& dist = row.distribution(t);
      d.probability_sum = std::max(d.probability_sum, std::abs(dist.total() - 1.0));
      const int spectator = levels_of(t).spectator;
      d.population_identity = std::max(
          d.population_identity, std::abs(dist.p0() - row.populations[static_cast<std::size_t>(spectator - 1)]));
    }
  }
  return d;
}

}  // namespace lambdaphase
