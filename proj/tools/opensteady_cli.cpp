// opensteady: steady states and thermodynamics of Lindblad models coupled to
// two thermal baths.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 solver error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "opensteady/cli/config.hpp"
#include "opensteady/cli/dump.hpp"
#include "opensteady/cli/presets.hpp"
#include "opensteady/cli/sweep.hpp"
#include "opensteady/error.hpp"
#include "opensteady/steady.hpp"
#include "opensteady/thermo.hpp"

namespace {

using namespace opensteady;
using namespace opensteady::cli;

constexpr int kUsageError = 2;
constexpr int kSolverError = 3;

struct ModelFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> out;
  std::map<std::string, std::string> values;

  void attach(CLI::App* app, bool sweep) {
    app->add_option("--config", config_path, "Config file (key = value)");
    app->add_option("--out", out, "Output path (default: standard output)");
    struct Flag {
      const char* flag;
      const char* key;
      const char* help;
    };
    static const Flag common[] = {
        {"--preset", "preset", "Named parameter set (see `presets`)"},
        {"--model", "model", "two_level | coupled_qubits | oscillator"},
        {"--omega", "omega", "Level splitting / oscillator frequency"},
        {"--omega1", "omega1", "Qubit 1 splitting"},
        {"--omega2", "omega2", "Qubit 2 splitting"},
        {"--j", "j", "Qubit-qubit coupling J"},
        {"--gamma", "gamma", "Bath 1 coupling rate"},
        {"--big-gamma", "big_gamma", "Bath 2 coupling rate"},
        {"--cutoff", "cutoff", "Oscillator Fock cutoff"},
        {"--t1", "t1", "Bath 1 temperature"},
        {"--t2", "t2", "Bath 2 temperature"},
    };
    static const Flag sweep_only[] = {
        {"--axis1", "axis1", "name:start:stop:points, name in T1, T2, J"},
        {"--axis2", "axis2", "Optional second axis"},
        {"--outputs", "outputs", "Comma list of U,S,C_T1,C_T2,F_T1,F_T2,populations"},
    };
    auto add = [&](const Flag& f) {
      app->add_option_function<std::string>(
          f.flag, [this, key = std::string(f.key)](const std::string& v) { values[key] = v; },
          f.help);
    };
    for (const auto& f : common) add(f);
    if (sweep)
      for (const auto& f : sweep_only) add(f);
  }

  SweepSpec resolve() const {
    RawConfig flags;
    for (const auto& [key, value] : values) flags[key] = {value, 0};
    RawConfig file = config_path ? parse_config_file(*config_path) : RawConfig{};
    SweepSpec spec = resolve_spec(merge(std::move(file), flags));
    if (out) spec.out_path = *out;
    return spec;
  }
};

void require_point(const SweepSpec& spec) {
  if (!spec.t1_set) throw ConfigError("--t1 is required");
  if (!spec.t2_set) throw ConfigError("--t2 is required");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

void warn_tail(const SweepSpec& spec, double top) {
  if (std::holds_alternative<OscillatorParams>(spec.params) && top > kTailWarning)
    std::cerr << "warning: top Fock level population " << top
              << " exceeds 1e-6; increase --cutoff\n";
}

int run_steady(const SweepSpec& spec) {
  require_point(spec);
  const LindbladModel model = make_model(spec.params);
  const SteadyStateResult res = solve_steady_state_detailed(model);
  warn_tail(spec, res.rho(res.rho.dim() - 1, res.rho.dim() - 1).real());
  const auto dump = steady_dump(spec.label, res.rho, internal_energy(res.rho, model.hamiltonian),
                                von_neumann_entropy(res.rho), res.residual);
  write_text(spec.out_path, dump.dump() + "\n");
  return 0;
}

int run_populations(const SweepSpec& spec) {
  require_point(spec);
  const LindbladModel model = make_model(spec.params);
  const DensityMatrix rho = solve_steady_state(model);
  warn_tail(spec, rho(rho.dim() - 1, rho.dim() - 1).real());
  std::string text = "level,eigenvalue,population\n";
  int k = 1;
  for (const auto& ep : eigenbasis_populations(rho, model.hamiltonian))
    text += std::to_string(k++) + "," + format_number(ep.eigenvalue) + "," +
            format_number(ep.population) + "\n";
  write_text(spec.out_path, text);
  return 0;
}

int run_sweep_command(const SweepSpec& spec, int workers) {
  const auto records = run_sweep(spec, workers);
  std::size_t ok = 0;
  std::size_t tail = 0;
  for (const auto& r : records) {
    if (r.ok()) {
      ++ok;
      if (r.top_level_population > kTailWarning) ++tail;
    } else {
      std::cerr << "warning: T1=" << format_number(r.t1) << " T2=" << format_number(r.t2)
                << " J=" << format_number(r.j) << ": " << r.error << "\n";
    }
  }
  if (std::holds_alternative<OscillatorParams>(spec.params) && tail > 0)
    std::cerr << "warning: " << tail
              << " grid points have top Fock level population above 1e-6; increase cutoff\n";
  std::ostringstream csv;
  write_csv(csv, spec, records);
  write_text(spec.out_path, csv.str());
  if (ok == 0) {
    std::cerr << "error: every grid point failed\n";
    return kSolverError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady states and thermodynamics of open quantum systems between two baths"};
  app.require_subcommand(1);

  ModelFlags steady_flags, pop_flags, sweep_flags;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* steady = app.add_subcommand("steady", "Solve one steady state and dump it as JSON");
  steady_flags.attach(steady, false);
  auto* pops = app.add_subcommand("populations", "Steady-state populations in the eigenbasis of H");
  pop_flags.attach(pops, false);
  auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid and write CSV");
  sweep_flags.attach(sweep, true);
  sweep->add_option("--workers", workers, "Concurrent solves")->check(CLI::PositiveNumber);
  app.add_subcommand("presets", "List named presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == steady) return run_steady(steady_flags.resolve());
    if (active == pops) return run_populations(pop_flags.resolve());
    if (active == sweep) return run_sweep_command(sweep_flags.resolve(), workers);
    for (const auto& p : presets()) std::cout << p.name << "\t" << p.description << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << active->help();
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kSolverError;
  }
}
