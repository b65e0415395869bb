#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warpstab/error.hpp"
#include "warpstab/numerics.hpp"
#include "warpstab/warping.hpp"

namespace warpstab::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 1,
  exit_violated = 2,
  exit_boundary = 3,
  exit_verification = 4,
  exit_domain = 5,
};

int exit_code(ErrorCode code);

struct ModelSpec {
  std::string kind;   // dss, rn, space_form, profile
  std::string shape;  // profiles: ellipsoid, hyperboloid, samples
  std::optional<double> m, c, q, b;
  std::optional<double> cap;
  std::vector<double> s, u;  // sampled meridian
};

struct RunConfig {
  ModelSpec model;
  std::optional<Interval> interval;  // native parameter
  int grid = 201;
  int order = 16;
  std::optional<double> tol;
  int l_max = 8;
  std::string out;  // CSV destination, stdout when empty
  std::string svg;
};

/// Reads [model], [run] and [output] tables; unknown keys are rejected.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& toml_text, const std::string& source = "<string>");

/// Throws config-parse for missing or contradictory model parameters.
WarpingModel make_model(const ModelSpec& spec);

/// The configured interval, checked against the model's native domain, or
/// the working interval when none is set.
Interval resolve_interval(const RunConfig& cfg, const WarpingModel& model);

/// Positive tolerances, grid >= 2, order >= 1, l_max >= 1.
void validate(const RunConfig& cfg);

}  // namespace warpstab::cli
