#pragma once

// Steady-state thermodynamics. Energies are in units of the model's reference
// frequency and temperatures in the same units with k_B = ħ = 1.

#include <vector>

#include "opensteady/density.hpp"
#include "opensteady/models.hpp"

namespace opensteady {

/// Bose–Einstein occupation 1/(e^{ω/T} − 1). T = 0 gives exactly 0.
double mean_occupation(Temperature t, double omega);

/// U = Tr(ρH).
double internal_energy(const DensityMatrix& rho, const ComplexMatrix& hamiltonian);

/// S = −Tr ρ ln ρ, with eigenvalues below 1e-14 contributing nothing.
double von_neumann_entropy(const DensityMatrix& rho);

enum class Bath { One = 1, Two = 2 };

/// U of the steady state of `family` at the given bath temperatures.
double steady_internal_energy(const ModelParams& family, Temperature t1, Temperature t2);

/// C = ∂U/∂T_i by a central difference with step max(1e-4·T_i, 1e-6); every
/// evaluation rebuilds the model and re-solves its steady state.
double specific_heat(const ModelParams& family, Bath bath, Temperature t1, Temperature t2);

/// e^{−H/T}/Z, shifted by the ground energy. T = 0 yields the uniform mixture
/// over the ground eigenspace (eigenvalues within 1e-10 of the minimum).
DensityMatrix gibbs_state(const ComplexMatrix& hamiltonian, Temperature t);

/// Uhlmann fidelity Tr√(√ρ₁ ρ₂ √ρ₁) (not squared).
double uhlmann_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

struct EigenPopulation {
  double eigenvalue;
  double population;
};

/// Populations ⟨v_k|ρ|v_k⟩ in the eigenbasis of H, ascending in energy.
std::vector<EigenPopulation> eigenbasis_populations(const DensityMatrix& rho,
                                                    const ComplexMatrix& hamiltonian);

}  // namespace opensteady
