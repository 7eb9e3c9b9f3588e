#include "opensteady/steady.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "opensteady/error.hpp"

namespace opensteady {

SteadyStateResult solve_steady_state_detailed(const LindbladModel& model) {
  const Superoperator lv = build_superoperator(model);
  const int n = lv.system_dim;
  const int d = lv.dim();

  // Row 0 is the (0,0) diagonal row; trace preservation makes it a linear
  // combination of the other diagonal rows, so it can carry Tr ρ = 1 instead.
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(lv.matrix.nonZeros()) + n);
  for (int r = 1; r < d; ++r)
    for (SparseComplexMatrix::InnerIterator it(lv.matrix, r); it; ++it)
      t.emplace_back(r, it.col(), it.value());
  for (int m = 0; m < n; ++m) t.emplace_back(0, lv.index(m, m), 1.0);
  const SparseComplexMatrix system = from_triplets(d, t);

  ComplexVector rhs = ComplexVector::Zero(d);
  rhs(0) = 1.0;

  ComplexVector x;
  try {
    x = sparse_solve(system, rhs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    throw Error(ErrorKind::NonUniqueSteadyState, std::string("steady-state system: ") + e.what());
  }

  DensityMatrix rho = DensityMatrix::sanitized(unvectorize(x, n));

  const double scale = inf_norm(lv.matrix);
  const ComplexVector r = lv.matrix * vectorize(rho.matrix());
  const double residual = inf_norm(r);
  if (!(residual <= 1e-9 * scale))
    throw Error(ErrorKind::NonUniqueSteadyState,
                "residual " + std::to_string(residual) + " exceeds 1e-9·‖L‖ = " +
                    std::to_string(1e-9 * scale));
  return {std::move(rho), residual, scale};
}

DensityMatrix solve_steady_state(const LindbladModel& model) {
  return solve_steady_state_detailed(model).rho;
}

double default_time_step(const LindbladModel& model) {
  double dissipative = 0.0;
  for (const auto& c : model.channels)
    dissipative += c.rate * inf_norm(ComplexMatrix(c.jump_operator.adjoint() * c.jump_operator));
  const double scale = std::max(inf_norm(model.hamiltonian), dissipative);
  return scale > 0.0 ? 0.01 / scale : 0.01;
}

double default_max_time(const LindbladModel& model) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& c : model.channels)
    if (c.rate > 0.0) smallest = std::min(smallest, c.rate);
  if (!std::isfinite(smallest))
    throw Error(ErrorKind::InvalidParams, "no dissipation channel with a nonzero rate");
  return 50.0 / smallest;
}

namespace {

ComplexMatrix rk4_step(const LindbladGenerator& f, const ComplexMatrix& rho,
                       const ComplexMatrix& k1, double h) {
  const ComplexMatrix k2 = f(rho + 0.5 * h * k1);
  const ComplexMatrix k3 = f(rho + 0.5 * h * k2);
  const ComplexMatrix k4 = f(rho + h * k3);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

ComplexMatrix propagate_for(const LindbladModel& model, const ComplexMatrix& rho0, double t,
                            double dt) {
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidParams, "dt must be positive");
  const LindbladGenerator f(model);
  if (rho0.rows() != f.dim() || rho0.cols() != f.dim())
    throw Error(ErrorKind::DimensionMismatch, "propagate_for: rho0 dimension differs from model");
  ComplexMatrix rho = rho0;
  double elapsed = 0.0;
  while (elapsed < t) {
    const double h = std::min(dt, t - elapsed);
    rho = rk4_step(f, rho, f(rho), h);
    elapsed += h;
  }
  return rho;
}

DensityMatrix propagate_to_steady(const LindbladModel& model, const DensityMatrix& rho0,
                                  const PropagationOptions& options) {
  const double dt = options.dt.value_or(default_time_step(model));
  const double t_max = options.t_max.value_or(default_max_time(model));
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidParams, "dt must be positive");
  const LindbladGenerator f(model);
  if (rho0.dim() != f.dim())
    throw Error(ErrorKind::DimensionMismatch, "propagate_to_steady: rho0 dimension differs");

  ComplexMatrix rho = rho0.matrix();
  double t = 0.0;
  for (;;) {
    const ComplexMatrix k1 = f(rho);
    const double rate = inf_norm(k1);
    if (rate < 1e-10) break;
    if (t >= t_max) {
      if (rate >= 1e-8)
        throw Error(ErrorKind::NotConverged,
                    "‖dρ/dt‖ = " + std::to_string(rate) + " at t_max = " + std::to_string(t_max));
      break;
    }
    const double h = std::min(dt, t_max - t);
    rho = rk4_step(f, rho, k1, h);
    t += h;
  }
  return DensityMatrix::sanitized(rho);
}

}  // namespace opensteady
