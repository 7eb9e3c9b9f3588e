#pragma once

// Run configuration: a flat `key = value` text format whose values can be
// overridden by command-line flags, resolved into a SweepSpec.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "opensteady/models.hpp"

namespace opensteady::cli {

/// Bad configuration or usage; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AxisName { T1, T2, J };

struct Axis {
  AxisName name = AxisName::T1;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;

  /// Evenly spaced grid, both ends included.
  std::vector<double> values() const;
};

enum class Output { U, S, C_T1, C_T2, F_T1, F_T2, Populations };

struct SweepSpec {
  /// Written to the `model` CSV column: the preset name if one was used,
  /// otherwise the model name.
  std::string label;
  ModelParams params;
  std::optional<Axis> axis1;
  std::optional<Axis> axis2;
  std::set<Output> outputs;
  std::string out_path;
  /// Which bath temperatures were fixed by the preset, file or flags.
  bool t1_set = false;
  bool t2_set = false;

  bool wants(Output o) const { return outputs.count(o) != 0; }
};

struct RawValue {
  std::string value;
  int line = 0;  // 0 for command-line flags
};

using RawConfig = std::map<std::string, RawValue>;

/// The accepted keys, in the order they are documented.
const std::vector<std::string>& config_keys();

/// Parses the text format. `#` starts a comment; blank lines are ignored.
/// Unknown keys and malformed lines throw ConfigError naming the line.
RawConfig parse_config_text(const std::string& text);
RawConfig parse_config_file(const std::filesystem::path& path);

/// Flag values override file values key by key.
RawConfig merge(RawConfig file, const RawConfig& flags);

/// Resolves a preset or model plus overrides into a validated spec.
SweepSpec resolve_spec(const RawConfig& config);

/// parse_config_file + resolve_spec.
SweepSpec parse_config(const std::filesystem::path& path);

Axis parse_axis(const std::string& text);
std::set<Output> parse_outputs(const std::string& text);
std::string axis_label(AxisName name);

}  // namespace opensteady::cli
