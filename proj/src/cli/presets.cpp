#include "opensteady/cli/presets.hpp"

namespace opensteady::cli {

namespace {

TwoLevelParams fig2_two_level() {
  TwoLevelParams p;
  p.omega = 1.0;
  p.gamma = 0.2;
  p.big_gamma = 0.3;
  return p;
}

CoupledQubitsParams fig3_qubits() {
  CoupledQubitsParams p;
  p.omega1 = 1.0;
  p.omega2 = 1.0;
  p.j = 0.2;
  p.gamma = 0.2;
  p.big_gamma = 0.3;
  return p;
}

OscillatorParams fig5_oscillator() {
  OscillatorParams p;
  p.omega = 1.0;
  p.gamma = 0.3;
  p.big_gamma = 0.2;
  p.cutoff = 100;
  return p;
}

std::vector<Preset> build_presets() {
  const Axis t1_wide{AxisName::T1, 0.05, 10.0, 50};
  const Axis t2_wide{AxisName::T2, 0.05, 10.0, 50};
  const std::set<Output> heat_energy_entropy{Output::U, Output::S, Output::C_T1, Output::C_T2};
  const std::set<Output> heats{Output::C_T1, Output::C_T2};
  const std::set<Output> fidelities{Output::F_T1, Output::F_T2};

  CoupledQubitsParams fig6d = fig3_qubits();
  fig6d.big_gamma = 0.0;
  OscillatorParams fig6c = fig5_oscillator();
  fig6c.big_gamma = 0.0;

  return {
      {"fig2", "two-level system: C_T1, C_T2, U, S over (T1, T2)", fig2_two_level(),
       std::nullopt, std::nullopt, t1_wide, t2_wide, heat_energy_entropy},
      {"fig3", "coupled qubits: C_T1, C_T2 over (T1, T2)", fig3_qubits(), std::nullopt,
       std::nullopt, Axis{AxisName::T1, 0.05, 10.0, 40}, Axis{AxisName::T2, 0.05, 10.0, 40},
       heats},
      {"fig4a", "coupled qubits: C_T1, C_T2 over (T1, J) at T2 = 1.5", fig3_qubits(),
       std::nullopt, 1.5, Axis{AxisName::T1, 0.05, 5.0, 40}, Axis{AxisName::J, 0.0, 2.0, 40},
       heats},
      {"fig4b", "coupled qubits: C_T1, C_T2 over (T2, J) at T1 = 1.5", fig3_qubits(), 1.5,
       std::nullopt, Axis{AxisName::T2, 0.05, 5.0, 40}, Axis{AxisName::J, 0.0, 2.0, 40}, heats},
      {"fig5", "damped oscillator (cutoff 100): C_T1, C_T2, U, S over (T1, T2)",
       fig5_oscillator(), std::nullopt, std::nullopt, Axis{AxisName::T1, 0.05, 2.0, 30},
       Axis{AxisName::T2, 0.05, 2.0, 30}, heat_energy_entropy},
      {"fig6a", "damped oscillator: fidelity with Gibbs states over (T1, T2)", fig5_oscillator(),
       std::nullopt, std::nullopt, Axis{AxisName::T1, 1.0, 50.0, 50},
       Axis{AxisName::T2, 1.0, 50.0, 50}, fidelities},
      {"fig6b", "coupled qubits: fidelity with Gibbs states over (T1, T2)", fig3_qubits(),
       std::nullopt, std::nullopt, Axis{AxisName::T1, 1.0, 50.0, 50},
       Axis{AxisName::T2, 1.0, 50.0, 50}, fidelities},
      {"fig6c", "damped oscillator without the second bath: fidelity over T1", fig6c,
       std::nullopt, 1.0, Axis{AxisName::T1, 0.05, 2.0, 40}, std::nullopt, fidelities},
      {"fig6d", "coupled qubits without the second bath: fidelity over T1", fig6d, std::nullopt,
       1.0, Axis{AxisName::T1, 0.05, 10.0, 60}, std::nullopt, fidelities},
      {"fig7", "coupled qubits: eigenbasis populations over (T1, T2)", fig3_qubits(),
       std::nullopt, std::nullopt, Axis{AxisName::T1, 0.05, 5.0, 30},
       Axis{AxisName::T2, 0.05, 5.0, 30}, {Output::Populations}},
  };
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace opensteady::cli
