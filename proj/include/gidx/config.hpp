#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gidx/ellipticity.hpp"
#include "gidx/realization.hpp"

namespace gidx {

// One batch job, parsed from a JSON config file. Every command reads the
// blocks it needs and ignores the rest; missing required blocks fail with the
// offending field path in the message.
struct JobConfig {
  std::string raw_text;  // exact file contents, hashed into reports

  std::optional<ActionSpec> action;
  int order = 0;
  double s = 0.0;
  std::map<int, CosphereFunction> terms;
  std::vector<SmoothingEntry> smoothing;

  EllipticityOptions ellipticity;
  IndexOptions index;

  double sweep_lo = -2.0;  // weight range for dilation sweeps
  double sweep_hi = 2.0;
  int sweep_grid = 33;

  double nct_theta = 0.7;
  double nct_length = 12.0;

  double uniform_alpha = 0.0;
  std::vector<int> uniform_trunc = {8, 16, 24};

  unsigned long long seed = 1;
  int threads = 1;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty: stdout

  // Command-line overrides; each command applies them to its own knobs.
  std::optional<std::vector<int>> trunc_override;
  std::optional<double> tol_override;

  GOperatorSpec operator_spec() const;  // needs the action + terms blocks
};

JobConfig parse_job_config(const std::string& json_text);
JobConfig load_job_config(const std::string& path);

}  // namespace gidx
