#include "opensteady/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "opensteady/cli/presets.hpp"
#include "opensteady/error.hpp"

namespace opensteady::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string where(const std::string& key, const RawValue& v) {
  if (v.line > 0) return "line " + std::to_string(v.line) + " (" + key + ")";
  return "--" + key;
}

double to_double(const std::string& text, const std::string& context) {
  double out = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(out))
    throw ConfigError(context + ": malformed number '" + text + "'");
  return out;
}

int to_int(const std::string& text, const std::string& context) {
  int out = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ConfigError(context + ": malformed integer '" + text + "'");
  return out;
}

ModelParams default_params(const std::string& model, const std::string& context) {
  if (model == "two_level") return TwoLevelParams{};
  if (model == "coupled_qubits") return CoupledQubitsParams{};
  if (model == "oscillator") return OscillatorParams{};
  throw ConfigError(context + ": unknown model '" + model +
                    "' (expected two_level, coupled_qubits or oscillator)");
}

// Returns a pointer to the named scalar of the active model, or nullptr if the
// model has no such parameter.
double* scalar_field(ModelParams& p, const std::string& key) {
  if (auto* q = std::get_if<TwoLevelParams>(&p)) {
    if (key == "omega") return &q->omega;
    if (key == "gamma") return &q->gamma;
    if (key == "big_gamma") return &q->big_gamma;
  } else if (auto* q = std::get_if<CoupledQubitsParams>(&p)) {
    if (key == "omega1") return &q->omega1;
    if (key == "omega2") return &q->omega2;
    if (key == "j") return &q->j;
    if (key == "gamma") return &q->gamma;
    if (key == "big_gamma") return &q->big_gamma;
  } else if (auto* q = std::get_if<OscillatorParams>(&p)) {
    if (key == "omega") return &q->omega;
    if (key == "gamma") return &q->gamma;
    if (key == "big_gamma") return &q->big_gamma;
  }
  return nullptr;
}

void set_temperature(SweepSpec& spec, int bath, double value, const std::string& context) {
  try {
    spec.params = with_bath_temperature(spec.params, bath, Temperature(value));
  } catch (const Error& e) {
    throw ConfigError(context + ": " + e.what());
  }
  (bath == 1 ? spec.t1_set : spec.t2_set) = true;
}

}  // namespace

std::vector<double> Axis::values() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == points - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (points - 1);
  }
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "model", "preset", "omega", "omega1", "omega2", "j",     "gamma",   "big_gamma",
      "cutoff", "t1",    "t2",    "axis1",  "axis2",  "outputs", "out_path"};
  return keys;
}

std::string axis_label(AxisName name) {
  switch (name) {
    case AxisName::T1: return "T1";
    case AxisName::T2: return "T2";
    case AxisName::J: return "J";
  }
  return "?";
}

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(trim(item));
  if (parts.size() != 4)
    throw ConfigError("axis '" + text + "' must have the form name:start:stop:points");
  Axis axis;
  if (parts[0] == "T1") axis.name = AxisName::T1;
  else if (parts[0] == "T2") axis.name = AxisName::T2;
  else if (parts[0] == "J") axis.name = AxisName::J;
  else throw ConfigError("axis name '" + parts[0] + "' must be one of T1, T2, J");
  axis.start = to_double(parts[1], "axis start");
  axis.stop = to_double(parts[2], "axis stop");
  axis.points = to_int(parts[3], "axis points");
  if (axis.points < 2) throw ConfigError("axis '" + text + "' needs at least 2 points");
  if (!(axis.start < axis.stop)) throw ConfigError("axis '" + text + "' needs start < stop");
  if (axis.name != AxisName::J && axis.start < 0.0)
    throw ConfigError("axis '" + text + "' has a negative temperature");
  return axis;
}

std::set<Output> parse_outputs(const std::string& text) {
  std::set<Output> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const std::string name = trim(item);
    if (name == "U") out.insert(Output::U);
    else if (name == "S") out.insert(Output::S);
    else if (name == "C_T1") out.insert(Output::C_T1);
    else if (name == "C_T2") out.insert(Output::C_T2);
    else if (name == "F_T1") out.insert(Output::F_T1);
    else if (name == "F_T2") out.insert(Output::F_T2);
    else if (name == "populations") out.insert(Output::Populations);
    else
      throw ConfigError("unknown output '" + name +
                        "' (expected U, S, C_T1, C_T2, F_T1, F_T2, populations)");
  }
  if (out.empty()) throw ConfigError("outputs list is empty");
  return out;
}

RawConfig parse_config_text(const std::string& text) {
  RawConfig out;
  const auto& keys = config_keys();
  std::stringstream ss(text);
  int line_no = 0;
  for (std::string line; std::getline(ss, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (value.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
    out[key] = {value, line_no};
  }
  return out;
}

RawConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

RawConfig merge(RawConfig file, const RawConfig& flags) {
  for (const auto& [key, value] : flags) file[key] = value;
  return file;
}

SweepSpec resolve_spec(const RawConfig& config) {
  SweepSpec spec;
  const Preset* preset = nullptr;

  if (const auto it = config.find("preset"); it != config.end()) {
    preset = find_preset(it->second.value);
    if (preset == nullptr)
      throw ConfigError(where("preset", it->second) + ": unknown preset '" + it->second.value +
                        "'");
    spec.label = preset->name;
    spec.params = preset->params;
    spec.axis1 = preset->axis1;
    spec.axis2 = preset->axis2;
    spec.outputs = preset->outputs;
    if (preset->fixed_t1) set_temperature(spec, 1, *preset->fixed_t1, "preset");
    if (preset->fixed_t2) set_temperature(spec, 2, *preset->fixed_t2, "preset");
  }

  if (const auto it = config.find("model"); it != config.end()) {
    const std::string context = where("model", it->second);
    if (preset != nullptr) {
      if (it->second.value != model_name(preset->params))
        throw ConfigError(context + ": preset '" + preset->name + "' uses model '" +
                          std::string(model_name(preset->params)) + "'");
    } else {
      spec.params = default_params(it->second.value, context);
      spec.label = it->second.value;
    }
  } else if (preset == nullptr) {
    throw ConfigError("either a preset or a model is required");
  }

  for (const char* key : {"omega", "omega1", "omega2", "j", "gamma", "big_gamma"}) {
    const auto it = config.find(key);
    if (it == config.end()) continue;
    const std::string context = where(key, it->second);
    double* field = scalar_field(spec.params, key);
    if (field == nullptr)
      throw ConfigError(context + ": not a parameter of the " +
                        std::string(model_name(spec.params)) + " model");
    *field = to_double(it->second.value, context);
  }
  if (const auto it = config.find("cutoff"); it != config.end()) {
    const std::string context = where("cutoff", it->second);
    auto* osc = std::get_if<OscillatorParams>(&spec.params);
    if (osc == nullptr) throw ConfigError(context + ": only the oscillator model has a cutoff");
    osc->cutoff = to_int(it->second.value, context);
  }
  for (int bath : {1, 2}) {
    const std::string key = bath == 1 ? "t1" : "t2";
    if (const auto it = config.find(key); it != config.end()) {
      const std::string context = where(key, it->second);
      set_temperature(spec, bath, to_double(it->second.value, context), context);
    }
  }

  auto read_axis = [&](const char* key, std::optional<Axis>& slot) {
    const auto it = config.find(key);
    if (it == config.end()) return;
    try {
      slot = parse_axis(it->second.value);
    } catch (const ConfigError& e) {
      throw ConfigError(where(key, it->second) + ": " + e.what());
    }
  };
  read_axis("axis1", spec.axis1);
  read_axis("axis2", spec.axis2);
  if (const auto it = config.find("outputs"); it != config.end()) {
    try {
      spec.outputs = parse_outputs(it->second.value);
    } catch (const ConfigError& e) {
      throw ConfigError(where("outputs", it->second) + ": " + e.what());
    }
  }
  if (const auto it = config.find("out_path"); it != config.end()) spec.out_path = it->second.value;

  if (spec.axis2 && !spec.axis1) throw ConfigError("axis2 given without axis1");
  if (spec.axis1 && spec.axis2 && spec.axis1->name == spec.axis2->name)
    throw ConfigError("axis1 and axis2 sweep the same quantity");
  for (const auto* axis : {&spec.axis1, &spec.axis2}) {
    if (*axis && (*axis)->name == AxisName::J &&
        !std::holds_alternative<CoupledQubitsParams>(spec.params))
      throw ConfigError("a J axis requires the coupled_qubits model");
  }
  if (spec.outputs.empty()) spec.outputs = {Output::U, Output::S};

  try {
    (void)make_model(spec.params);
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid model parameters: ") + e.what());
  }
  return spec;
}

SweepSpec parse_config(const std::filesystem::path& path) {
  return resolve_spec(parse_config_file(path));
}

}  // namespace opensteady::cli
