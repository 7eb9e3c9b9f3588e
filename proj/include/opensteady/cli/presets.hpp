#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opensteady/cli/config.hpp"

namespace opensteady::cli {

/// Named parameter sets reproducing the grids behind the published figures.
struct Preset {
  std::string name;
  std::string description;
  ModelParams params;
  std::optional<double> fixed_t1;
  std::optional<double> fixed_t2;
  Axis axis1;
  std::optional<Axis> axis2;
  std::set<Output> outputs;
};

const std::vector<Preset>& presets();

/// nullptr when the name is unknown.
const Preset* find_preset(const std::string& name);

}  // namespace opensteady::cli
