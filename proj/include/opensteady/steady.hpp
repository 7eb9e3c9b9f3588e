#pragma once

#include <optional>

#include "opensteady/density.hpp"
#include "opensteady/liouville.hpp"

namespace opensteady {

struct SteadyStateResult {
  DensityMatrix rho;
  /// ‖𝓛 vec(ρ_S)‖∞ against the unmodified Liouvillian.
  double residual = 0.0;
  /// ‖𝓛‖∞, the scale the residual is judged against.
  double liouvillian_norm = 0.0;
};

/// Steady state from the zero mode of the Liouvillian.
///
/// The (0,0) row of 𝓛 is replaced by the trace functional and the system is
/// solved against e₀ by sparse LU. Throws NonUniqueSteadyState when the
/// factorization is singular or the residual against the original 𝓛 exceeds
/// 1e-9·‖𝓛‖∞, and InvalidState when ρ_S has an eigenvalue below −1e-8.
SteadyStateResult solve_steady_state_detailed(const LindbladModel& model);

DensityMatrix solve_steady_state(const LindbladModel& model);

struct PropagationOptions {
  /// Defaults to 0.01 / max(‖H‖∞, Σ r_k‖L_k†L_k‖∞).
  std::optional<double> dt;
  /// Defaults to 50 / (smallest nonzero channel rate).
  std::optional<double> t_max;
};

double default_time_step(const LindbladModel& model);
double default_max_time(const LindbladModel& model);

/// Classic RK4 on the matrix-form generator. Stops once ‖dρ/dt‖∞ < 1e-10 or
/// at t_max; throws NotConverged if t_max is reached with ‖dρ/dt‖∞ ≥ 1e-8.
DensityMatrix propagate_to_steady(const LindbladModel& model, const DensityMatrix& rho0,
                                  const PropagationOptions& options = {});

/// Fixed-duration RK4 evolution (no convergence test); returns the raw,
/// un-renormalized state at time t.
ComplexMatrix propagate_for(const LindbladModel& model, const ComplexMatrix& rho0, double t,
                            double dt);

}  // namespace opensteady
