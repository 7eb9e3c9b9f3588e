// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "opensteady/cli/presets.hpp"
#include "opensteady/cli/sweep.hpp"
#include "opensteady/error.hpp"
#include "opensteady/liouville.hpp"
#include "opensteady/models.hpp"
#include "opensteady/steady.hpp"
#include "opensteady/thermo.hpp"
#include "test_support.hpp"

using namespace opensteady;
using namespace opensteady::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<ModelParams> zoo(double t1, double t2, int cutoff) {
  TwoLevelParams two;
  CoupledQubitsParams qubits;
  OscillatorParams osc;
  osc.cutoff = cutoff;
  return {with_temperatures(two, Temperature(t1), Temperature(t2)),
          with_temperatures(qubits, Temperature(t1), Temperature(t2)),
          with_temperatures(osc, Temperature(t1), Temperature(t2))};
}

cli::SweepSpec preset_spec(const std::string& name,
                           std::initializer_list<std::pair<const char*, const char*>> extra = {}) {
  cli::RawConfig c;
  c["preset"] = {name, 0};
  for (const auto& [k, v] : extra) c[k] = {v, 0};
  return cli::resolve_spec(c);
}

Outcome closed_form_grid() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int k = 0; k < 20; ++k) {
      TwoLevelParams p;
      p.t1 = Temperature(0.1 + 9.9 * i / 19.0);
      p.t2 = Temperature(0.1 + 9.9 * k / 19.0);
      const DensityMatrix solved = solve_steady_state(make_two_level(p));
      worst = std::max(worst, max_abs(solved.matrix() - two_level_closed_form(p).matrix()));
    }
  const double t = seconds_since(start);
  return {worst <= 1e-10 && t < 1.0, fmt("max error %.2e, %.3f s", worst, t)};
}

Outcome effective_hamiltonian_identity() {
  double worst = 0.0;
  for (const auto& p : zoo(1.0, 2.0, 12)) {
    const LindbladModel m = make_model(p);
    const SparseComplexMatrix diff =
        build_effective_hamiltonian(m).matrix - Complex(0.0, 1.0) * build_superoperator(m).matrix;
    worst = std::max(worst, inf_norm(diff));
  }
  return {worst <= 1e-12, fmt("max ||H_eff - iL||inf = %.2e", worst)};
}

Outcome trace_preservation() {
  double worst = 0.0;
  for (const auto& p : zoo(1.0, 2.0, 12)) {
    const Superoperator s = build_superoperator(make_model(p));
    const int n = s.system_dim;
    const ComplexMatrix dense = s.matrix.toDense();
    for (int col = 0; col < n * n; ++col) {
      Complex sum = 0.0;
      for (int m = 0; m < n; ++m) sum += dense(s.index(m, m), col);
      worst = std::max(worst, std::abs(sum));
    }
  }
  return {worst <= 1e-12, fmt("max |sum of diagonal rows| = %.2e", worst)};
}

Outcome thermalization() {
  double worst_f = 1.0, worst_n = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    OscillatorParams p;
    p.big_gamma = 0.0;
    p.cutoff = 60;
    p.t1 = Temperature(t);
    p.t2 = Temperature(t);
    const LindbladModel m = make_damped_oscillator(p);
    const DensityMatrix rho = solve_steady_state(m);
    worst_f = std::min(worst_f, uhlmann_fidelity(rho, gibbs_state(m.hamiltonian, Temperature(t))));
    const double n = (rho.matrix() * ops::number(60)).trace().real();
    // Independent Bose-Einstein oracle
    worst_n = std::max(worst_n, std::abs(n - 1.0 / (std::exp(1.0 / t) - 1.0)));
  }
  return {worst_f >= 1.0 - 1e-6 && worst_n <= 1e-6,
          fmt("min F = %.10f, max |<n> - nbar| = %.2e", worst_f, worst_n)};
}

Outcome non_thermal() {
  CoupledQubitsParams p;
  p.big_gamma = 0.0;
  p.j = 0.2;
  p.t1 = Temperature(0.2);
  p.t2 = Temperature(0.2);
  const LindbladModel m = make_coupled_qubits(p);
  const DensityMatrix gibbs = gibbs_state(m.hamiltonian, Temperature(0.2));
  const double f = uhlmann_fidelity(solve_steady_state(m), gibbs);
  const double f_rk4 = uhlmann_fidelity(propagate_to_steady(m, DensityMatrix::maximally_mixed(4)), gibbs);
  return {f <= 1.0 - 1e-3 && f_rk4 <= 1.0 - 1e-3,
          fmt("F = %.7f (RK4 %.7f, frozen 0.9961694)", f, f_rk4)};
}

Outcome cross_method() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (const auto& p : zoo(1.0, 2.0, 8)) {
    const LindbladModel m = make_model(p);
    const DensityMatrix exact = solve_steady_state(m);
    for (int trial = 0; trial < 3; ++trial)
      worst = std::max(worst, trace_distance(propagate_to_steady(m, random_state(rng, m.dim())), exact));
  }
  return {worst <= 1e-6, fmt("max trace distance %.2e", worst)};
}

Outcome specific_heat_oracle() {
  TwoLevelParams p;
  p.big_gamma = 0.0;
  double worst = 0.0;
  for (int i = 0; i <= 48; ++i) {
    const double t = 0.2 + 4.8 * i / 48.0;
    const double x = 1.0 / t;
    const double schottky = x * x * std::exp(x) / ((std::exp(x) + 1.0) * (std::exp(x) + 1.0));
    const double c = specific_heat(p, Bath::One, Temperature(t), Temperature(1.0));
    worst = std::max(worst, std::abs(c - schottky) / schottky);
  }
  const TwoLevelParams two;
  const double cold = specific_heat(two, Bath::One, Temperature(0.05), Temperature(1.0));
  const double hot = specific_heat(two, Bath::One, Temperature(100.0), Temperature(1.0));
  return {worst <= 1e-4 && std::abs(cold) < 1e-3 && std::abs(hot) < 1e-3,
          fmt("max rel error %.2e, C(0.05) = %.2e, C(100) = %.2e", worst, cold, hot)};
}

Outcome fidelity_trend() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* name : {"fig6a", "fig6b"}) {
    const cli::SweepSpec spec = preset_spec(name);
    auto at = [&](double t1, double t2) {
      const cli::SweepRecord r = cli::evaluate_point(
          spec, with_temperatures(spec.params, Temperature(t1), Temperature(t2)));
      if (!r.ok()) throw std::runtime_error(r.error);
      return r;
    };
    for (double other : {1.0, 50.0}) {
      const double lo1 = *at(1.0, other).f_gibbs_t1, hi1 = *at(50.0, other).f_gibbs_t1;
      const double lo2 = *at(other, 1.0).f_gibbs_t2, hi2 = *at(other, 50.0).f_gibbs_t2;
      ok = ok && hi1 > lo1 && hi2 > lo2;
      detail << name << " T1 axis (T2=" << other << ") " << lo1 << "->" << hi1 << "; T2 axis (T1="
             << other << ") " << lo2 << "->" << hi2 << "; ";
    }
    const auto lo = at(1.0, 1.0), hi = at(50.0, 50.0);
    ok = ok && *hi.f_gibbs_t1 > *lo.f_gibbs_t1;
    detail << name << " diagonal " << *lo.f_gibbs_t1 << "->" << *hi.f_gibbs_t1 << "; ";
  }
  return {ok, detail.str()};
}

Outcome degeneracy() {
  CoupledQubitsParams p;
  p.j = 0.0;
  p.big_gamma = 0.0;
  p.t1 = Temperature(1.0);
  p.t2 = Temperature(1.0);
  try {
    solve_steady_state(make_coupled_qubits(p));
  } catch (const Error& e) {
    return {e.kind() == ErrorKind::NonUniqueSteadyState, e.what()};
  }
  return {false, "returned a state"};
}

Outcome performance() {
  OscillatorParams p;
  p.cutoff = 100;
  p.gamma = 0.3;
  p.big_gamma = 0.2;
  p.t1 = Temperature(1.0);
  p.t2 = Temperature(1.5);
  auto start = Clock::now();
  solve_steady_state(make_damped_oscillator(p));
  const double single = seconds_since(start);

  const cli::SweepSpec spec = preset_spec("fig5", {{"outputs", "U,S"}});
  start = Clock::now();
  const auto records = cli::run_sweep(spec, 4);
  const double sweep = seconds_since(start);
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.ok() ? 0 : 1;
  return {single < 2.0 && sweep < 600.0 && records.size() == 900 && failed == 0,
          fmt("single solve %.3f s, %zu-point sweep %.1f s on %u hardware threads, %zu failed", single,
              records.size(), sweep, std::thread::hardware_concurrency(), failed)};
}

Outcome property_suites() {
  std::mt19937_64 rng(11);
  bool entropy_ok = von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == std::log(2.0);
  for (int n = 2; n <= 8; ++n) {
    ComplexVector psi = random_matrix(rng, n, 1);
    entropy_ok = entropy_ok && von_neumann_entropy(DensityMatrix::pure(psi)) <= 1e-12 &&
                 std::abs(von_neumann_entropy(DensityMatrix::maximally_mixed(n)) - std::log(n)) <= 1e-14;
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const double s = von_neumann_entropy(random_state(rng, n));
    entropy_ok = entropy_ok && s >= 0.0 && s <= std::log(static_cast<double>(n));
  }

  bool fidelity_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const DensityMatrix a = random_state(rng, n), b = random_state(rng, n);
    const double ab = uhlmann_fidelity(a, b), ba = uhlmann_fidelity(b, a);
    fidelity_ok = fidelity_ok && ab >= 0.0 && ab <= 1.0 + 1e-9 && std::abs(ab - ba) <= 1e-9 &&
                  std::abs(uhlmann_fidelity(a, a) - 1.0) <= 1e-9;
  }

  auto csv = [](const cli::SweepSpec& spec, int workers) {
    std::ostringstream out;
    cli::write_csv(out, spec, cli::run_sweep(spec, workers));
    return out.str();
  };
  bool csv_ok = true;
  for (const char* name : {"fig2", "fig3", "fig6c", "fig7"}) {
    const cli::SweepSpec spec = name == std::string("fig6c")
                                    ? preset_spec(name, {{"axis1", "T1:0.2:3:4"}, {"cutoff", "30"}})
                                    : preset_spec(name, {{"axis1", "T1:0.2:3:4"}});
    const std::string one = csv(spec, 1);
    csv_ok = csv_ok && one == csv(spec, 1) && one == csv(spec, 4);
  }
  return {entropy_ok && fidelity_ok && csv_ok,
          fmt("entropy %s, fidelity %s, CSV determinism %s", entropy_ok ? "ok" : "FAIL",
              fidelity_ok ? "ok" : "FAIL", csv_ok ? "ok" : "FAIL")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"closed-form two-level oracle", closed_form_grid},
      {"effective-Hamiltonian identity", effective_hamiltonian_identity},
      {"trace preservation", trace_preservation},
      {"thermalization limit", thermalization},
      {"non-thermal steady state", non_thermal},
      {"cross-method oracle", cross_method},
      {"specific-heat oracle", specific_heat_oracle},
      {"high-temperature fidelity trend", fidelity_trend},
      {"degeneracy detection", degeneracy},
      {"performance", performance},
      {"unit property suites", property_suites},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
