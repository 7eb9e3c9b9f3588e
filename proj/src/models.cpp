#include "opensteady/models.hpp"

#include <cmath>
#include <string>

#include "opensteady/error.hpp"
#include "opensteady/thermo.hpp"

namespace opensteady {

Temperature::Temperature(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0)
    throw Error(ErrorKind::InvalidParams, "temperature must be finite and >= 0, got " +
                                              std::to_string(value));
}

namespace ops {

ComplexMatrix sigma_plus() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

ComplexMatrix sigma_x() { return sigma_plus() + sigma_minus(); }

ComplexMatrix sigma_z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

ComplexMatrix excited_projector() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}

ComplexMatrix annihilation(int cutoff) {
  ComplexMatrix a = ComplexMatrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix number(int cutoff) {
  ComplexMatrix m = ComplexMatrix::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) m(n, n) = static_cast<double>(n);
  return m;
}

}  // namespace ops

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

void require_rate(double r, const char* name) {
  require(std::isfinite(r) && r >= 0.0, std::string(name) + " must be finite and >= 0");
}

void require_frequency(double w, const char* name) {
  require(std::isfinite(w) && w > 0.0, std::string(name) + " must be finite and > 0");
}

}  // namespace

LindbladModel make_two_level(const TwoLevelParams& p) {
  require_frequency(p.omega, "omega");
  require_rate(p.gamma, "gamma");
  require_rate(p.big_gamma, "big_gamma");
  const double n1 = mean_occupation(p.t1, p.omega);
  const double n2 = mean_occupation(p.t2, p.omega);

  LindbladModel m;
  m.hamiltonian = 0.5 * p.omega * ops::sigma_z();
  m.channels = {
      {p.gamma * n1, ops::sigma_plus()},
      {p.gamma * (n1 + 1.0), ops::sigma_minus()},
      {p.big_gamma * (2.0 * n2 + 1.0), ops::sigma_x()},
  };
  return m;
}

LindbladModel make_coupled_qubits(const CoupledQubitsParams& p) {
  require_frequency(p.omega1, "omega1");
  require_frequency(p.omega2, "omega2");
  require(std::isfinite(p.j), "j must be finite");
  require_rate(p.gamma, "gamma");
  require_rate(p.big_gamma, "big_gamma");
  const double n1 = mean_occupation(p.t1, p.omega1);
  const double n2 = mean_occupation(p.t2, p.omega2);

  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  LindbladModel m;
  m.hamiltonian = p.omega1 * kron(ops::excited_projector(), id) +
                  p.omega2 * kron(id, ops::excited_projector()) +
                  p.j * kron(ops::sigma_x(), ops::sigma_x());
  m.channels = {
      {p.gamma * (n1 + 1.0), kron(ops::sigma_minus(), id)},
      {p.gamma * n1, kron(ops::sigma_plus(), id)},
      {p.big_gamma * (2.0 * n2 + 1.0), kron(id, ops::sigma_x())},
  };
  return m;
}

LindbladModel make_damped_oscillator(const OscillatorParams& p) {
  require_frequency(p.omega, "omega");
  require_rate(p.gamma, "gamma");
  require_rate(p.big_gamma, "big_gamma");
  require(p.cutoff >= 2, "cutoff must be >= 2");
  const double n1 = mean_occupation(p.t1, p.omega);
  const double n2 = mean_occupation(p.t2, p.omega);

  const ComplexMatrix a = ops::annihilation(p.cutoff);
  const ComplexMatrix ad = a.adjoint();
  LindbladModel m;
  m.hamiltonian = p.omega * ops::number(p.cutoff);
  m.channels = {
      {p.gamma * n1, ad},
      {p.gamma * (n1 + 1.0), a},
      {p.big_gamma * (2.0 * n2 + 1.0), a + ad},
  };
  return m;
}

LindbladModel make_model(const ModelParams& p) {
  return std::visit(
      [](const auto& q) -> LindbladModel {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, TwoLevelParams>) return make_two_level(q);
        else if constexpr (std::is_same_v<T, CoupledQubitsParams>) return make_coupled_qubits(q);
        else return make_damped_oscillator(q);
      },
      p);
}

DensityMatrix two_level_closed_form(const TwoLevelParams& p) {
  require_frequency(p.omega, "omega");
  require_rate(p.gamma, "gamma");
  require_rate(p.big_gamma, "big_gamma");
  const double n1 = mean_occupation(p.t1, p.omega);
  const double n2 = mean_occupation(p.t2, p.omega);
  const double up = p.gamma * n1;           // γ₁
  const double down = p.gamma * (n1 + 1.0); // γ₂
  const double flip = p.big_gamma * (2.0 * n2 + 1.0);
  if (up + flip == 0.0 && down + flip == 0.0)
    throw Error(ErrorKind::AllRatesZero, "two-level closed form needs a nonzero rate");
  // ρ_ee/ρ_gg = (up + flip)/(down + flip)
  const double excited = (up + flip) / (up + down + 2.0 * flip);
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 1.0 - excited;
  rho(1, 1) = excited;
  return DensityMatrix(rho);
}

std::string_view model_name(const ModelParams& p) {
  switch (p.index()) {
    case 0: return "two_level";
    case 1: return "coupled_qubits";
    default: return "oscillator";
  }
}

int model_dim(const ModelParams& p) {
  switch (p.index()) {
    case 0: return 2;
    case 1: return 4;
    default: return std::get<OscillatorParams>(p).cutoff;
  }
}

ComplexMatrix model_hamiltonian(const ModelParams& p) { return make_model(p).hamiltonian; }

Temperature bath_temperature(const ModelParams& p, int bath) {
  return std::visit([bath](const auto& q) { return bath == 1 ? q.t1 : q.t2; }, p);
}

ModelParams with_temperatures(ModelParams p, Temperature t1, Temperature t2) {
  std::visit(
      [&](auto& q) {
        q.t1 = t1;
        q.t2 = t2;
      },
      p);
  return p;
}

ModelParams with_bath_temperature(ModelParams p, int bath, Temperature t) {
  if (bath != 1 && bath != 2) throw Error(ErrorKind::InvalidParams, "bath must be 1 or 2");
  std::visit([&](auto& q) { (bath == 1 ? q.t1 : q.t2) = t; }, p);
  return p;
}

double coupling(const ModelParams& p) {
  if (const auto* q = std::get_if<CoupledQubitsParams>(&p)) return q->j;
  return 0.0;
}

ModelParams with_coupling(ModelParams p, double j) {
  auto* q = std::get_if<CoupledQubitsParams>(&p);
  if (q == nullptr)
    throw Error(ErrorKind::InvalidParams,
                std::string(model_name(p)) + " model has no coupling constant J");
  q->j = j;
  return p;
}

}  // namespace opensteady
