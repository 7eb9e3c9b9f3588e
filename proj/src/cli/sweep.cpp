#include "opensteady/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <thread>

#include "opensteady/error.hpp"
#include "opensteady/steady.hpp"
#include "opensteady/thermo.hpp"

namespace opensteady::cli {

namespace {

ModelParams apply_axis(ModelParams p, AxisName name, double value) {
  switch (name) {
    case AxisName::T1: return with_bath_temperature(std::move(p), 1, Temperature(value));
    case AxisName::T2: return with_bath_temperature(std::move(p), 2, Temperature(value));
    case AxisName::J: return with_coupling(std::move(p), value);
  }
  return p;
}

bool sweeps(const SweepSpec& spec, AxisName name) {
  return (spec.axis1 && spec.axis1->name == name) || (spec.axis2 && spec.axis2->name == name);
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<ModelParams> sweep_grid(const SweepSpec& spec) {
  if (!spec.axis1) throw ConfigError("a sweep needs at least axis1");
  if (!spec.t1_set && !sweeps(spec, AxisName::T1))
    throw ConfigError("t1 is neither fixed nor swept");
  if (!spec.t2_set && !sweeps(spec, AxisName::T2))
    throw ConfigError("t2 is neither fixed nor swept");

  std::vector<ModelParams> grid;
  const auto outer = spec.axis1->values();
  const std::vector<double> inner = spec.axis2 ? spec.axis2->values() : std::vector<double>{0.0};
  grid.reserve(outer.size() * inner.size());
  for (double a : outer) {
    const ModelParams row = apply_axis(spec.params, spec.axis1->name, a);
    for (double b : inner)
      grid.push_back(spec.axis2 ? apply_axis(row, spec.axis2->name, b) : row);
  }
  return grid;
}

SweepRecord evaluate_point(const SweepSpec& spec, const ModelParams& params) {
  SweepRecord rec;
  rec.model = spec.label;
  rec.t1 = bath_temperature(params, 1).value();
  rec.t2 = bath_temperature(params, 2).value();
  rec.j = coupling(params);
  try {
    const LindbladModel model = make_model(params);
    const DensityMatrix rho = solve_steady_state(model);
    const ComplexMatrix& h = model.hamiltonian;
    rec.top_level_population = rho(rho.dim() - 1, rho.dim() - 1).real();

    if (spec.wants(Output::U)) rec.u = internal_energy(rho, h);
    if (spec.wants(Output::S)) rec.s = von_neumann_entropy(rho);
    if (spec.wants(Output::F_T1))
      rec.f_gibbs_t1 = uhlmann_fidelity(rho, gibbs_state(h, bath_temperature(params, 1)));
    if (spec.wants(Output::F_T2))
      rec.f_gibbs_t2 = uhlmann_fidelity(rho, gibbs_state(h, bath_temperature(params, 2)));
    if (spec.wants(Output::Populations))
      for (const auto& ep : eigenbasis_populations(rho, h)) rec.populations.push_back(ep.population);
    const Temperature t1 = bath_temperature(params, 1);
    const Temperature t2 = bath_temperature(params, 2);
    if (spec.wants(Output::C_T1)) rec.c_t1 = specific_heat(params, Bath::One, t1, t2);
    if (spec.wants(Output::C_T2)) rec.c_t2 = specific_heat(params, Bath::Two, t1, t2);
  } catch (const Error& e) {
    SweepRecord failed;
    failed.model = rec.model;
    failed.t1 = rec.t1;
    failed.t2 = rec.t2;
    failed.j = rec.j;
    failed.error = e.what();
    return failed;
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int workers) {
  const std::vector<ModelParams> grid = sweep_grid(spec);
  std::vector<SweepRecord> records(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) records[i] = evaluate_point(spec, grid[i]);
  };
  const int n = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(grid.size(), 1)));
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(n - 1));
  for (int w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  return records;
}

std::string csv_header(const SweepSpec& spec) {
  std::string h = "model,T1,T2,J,U,S,C_T1,C_T2,F_gibbs_T1,F_gibbs_T2";
  if (spec.wants(Output::Populations))
    for (int k = 1; k <= model_dim(spec.params); ++k) h += ",p" + std::to_string(k);
  return h;
}

std::string csv_row(const SweepSpec& spec, const SweepRecord& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  std::string row = r.model + "," + format_number(r.t1) + "," + format_number(r.t2) + "," +
                    format_number(r.j) + "," + opt(r.u) + "," + opt(r.s) + "," + opt(r.c_t1) +
                    "," + opt(r.c_t2) + "," + opt(r.f_gibbs_t1) + "," + opt(r.f_gibbs_t2);
  if (spec.wants(Output::Populations)) {
    const int n = model_dim(spec.params);
    for (int k = 0; k < n; ++k) {
      row += ",";
      if (static_cast<std::size_t>(k) < r.populations.size())
        row += format_number(r.populations[static_cast<std::size_t>(k)]);
    }
  }
  return row;
}

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRecord>& records) {
  out << csv_header(spec) << '\n';
  for (const auto& r : records) out << csv_row(spec, r) << '\n';
}

}  // namespace opensteady::cli
