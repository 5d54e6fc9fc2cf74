#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqz/errors.hpp"
#include "sqz/experiments.hpp"

namespace sqz {

enum class OutputFormat { csv, json, both };

// Fully resolved description of one CLI run. Produced by parse_config plus
// flag merging; consumed by run(). Field defaults are the documented
// config-file defaults.
struct RunConfig {
  // spectrum | sweep-2a | sweep-2b | polaritons | rwa-validate |
  // oracle-compare
  std::string selector;

  SystemParams params;

  // Measurement grid. omega_min/omega_max default to -3W/+3W when unset.
  std::optional<double> omega_min;
  std::optional<double> omega_max;
  int omega_count = 2001;
  std::vector<double> thetas;  // defaults to {pi/6, 2pi/3} when empty

  // Sweep family; when absent the selector picks its conventional axis and
  // value list.
  std::optional<SweepAxis> axis;
  std::vector<double> values;

  std::string out_dir = ".";
  OutputFormat format = OutputFormat::csv;
  int threads = 1;  // 0 = auto (hardware concurrency)
};

// Parses the documented INI-style config text (docs/config.md). Syntax
// problems — malformed lines, unknown sections or keys, unparsable numbers —
// throw Error(config_parse); structurally valid configs with out-of-domain
// content (unknown selector, failed parameter validation, empty or reversed
// grids, sweep settings on a non-sweep selector) throw
// Error(config_domain).
RunConfig parse_config(const std::string& text);

// Reads the file and defers to parse_config. Unreadable file:
// Error(io_failure).
RunConfig parse_config_file(const std::string& path);

// Thread-count precedence: the --threads flag beats the SQZSIM_THREADS
// environment variable, which beats the [output] threads key. The
// environment variable is consulted only when the flag is absent.
void apply_thread_override(RunConfig& cfg, std::optional<int> flag_threads);

// Materialized uniform measurement grid for this config.
std::vector<double> omega_grid(const RunConfig& cfg);

// Theta list with the documented default applied.
std::vector<double> theta_list(const RunConfig& cfg);

// Axis and value list with per-selector defaults applied.
SweepAxis sweep_axis(const RunConfig& cfg);
std::vector<double> sweep_values(const RunConfig& cfg);

}  // namespace sqz
