#pragma once

// The three example systems as parameterized model factories.
//
// Basis conventions (fixed, relied upon by matrix dumps):
//   qubit       |g⟩ = index 0, |e⟩ = index 1
//   two qubits  qubit 1 is the major index: |q1 q2⟩ ↦ 2·q1 + q2
//   oscillator  Fock states |0⟩ … |N−1⟩

#include <string_view>
#include <variant>

#include "opensteady/density.hpp"
#include "opensteady/liouville.hpp"

namespace opensteady {

/// Bath temperature in units of the model's reference energy (k_B = ħ = 1).
/// Zero is legal and is treated as the exact limit.
class Temperature {
 public:
  constexpr Temperature() = default;
  explicit Temperature(double value);

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

struct TwoLevelParams {
  double omega = 1.0;
  double gamma = 0.2;
  double big_gamma = 0.3;
  Temperature t1;
  Temperature t2;
};

struct CoupledQubitsParams {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double j = 0.2;
  double gamma = 0.2;
  double big_gamma = 0.3;
  Temperature t1;
  Temperature t2;
};

struct OscillatorParams {
  double omega = 1.0;
  double gamma = 0.3;
  double big_gamma = 0.2;
  Temperature t1;
  Temperature t2;
  int cutoff = 100;
};

/// A model family: parameters from which the Lindblad model is rebuilt for
/// any pair of bath temperatures.
using ModelParams = std::variant<TwoLevelParams, CoupledQubitsParams, OscillatorParams>;

namespace ops {
ComplexMatrix sigma_plus();   // |e⟩⟨g|
ComplexMatrix sigma_minus();  // |g⟩⟨e|
ComplexMatrix sigma_x();
ComplexMatrix sigma_z();      // |e⟩⟨e| − |g⟩⟨g|
ComplexMatrix excited_projector();
/// Truncated annihilation operator, a|n⟩ = √n |n−1⟩.
ComplexMatrix annihilation(int cutoff);
ComplexMatrix number(int cutoff);
}  // namespace ops

/// H = (Ω/2)σ^z; channels (γn̄₁, σ^+), (γ(n̄₁+1), σ^−), (Γ(2n̄₂+1), σ^x).
LindbladModel make_two_level(const TwoLevelParams& p);

/// H = Ω₁|e⟩₁⟨e| + Ω₂|e⟩₂⟨e| + Jσ₁^xσ₂^x; channels (γ(n̄₁+1), σ₁^−),
/// (γn̄₁, σ₁^+), (Γ(2n̄₂+1), σ₂^x). n̄₁ uses Ω₁ and n̄₂ uses Ω₂.
LindbladModel make_coupled_qubits(const CoupledQubitsParams& p);

/// H = ωa†a; channels (γn̄₁, a†), (γ(n̄₁+1), a), (Γ(2n̄₂+1), a + a†).
LindbladModel make_damped_oscillator(const OscillatorParams& p);

LindbladModel make_model(const ModelParams& p);

/// Diagonal steady state from ρ_ee/ρ_gg = (γ₁ + Γ₁)/(γ₂ + Γ₁), ρ_gg + ρ_ee = 1.
/// Throws AllRatesZero when every rate vanishes.
DensityMatrix two_level_closed_form(const TwoLevelParams& p);

std::string_view model_name(const ModelParams& p);
int model_dim(const ModelParams& p);
ComplexMatrix model_hamiltonian(const ModelParams& p);

Temperature bath_temperature(const ModelParams& p, int bath);
ModelParams with_temperatures(ModelParams p, Temperature t1, Temperature t2);
ModelParams with_bath_temperature(ModelParams p, int bath, Temperature t);

/// Coupling J for the coupled-qubit model, 0 for the others.
double coupling(const ModelParams& p);
/// Throws InvalidParams for models without a coupling.
ModelParams with_coupling(ModelParams p, double j);

}  // namespace opensteady
