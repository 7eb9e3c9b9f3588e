#include "opensteady/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opensteady/error.hpp"
#include "opensteady/steady.hpp"

namespace opensteady {

double mean_occupation(Temperature t, double omega) {
  if (!(omega > 0.0))
    throw Error(ErrorKind::NonpositiveFrequency, "omega must be > 0, got " + std::to_string(omega));
  if (t.value() == 0.0) return 0.0;
  const double x = omega / t.value();
  if (x > 700.0) return 0.0;
  if (x < 1e-8) return t.value() / omega - 0.5;
  return 1.0 / std::expm1(x);
}

double internal_energy(const DensityMatrix& rho, const ComplexMatrix& hamiltonian) {
  if (hamiltonian.rows() != rho.dim() || hamiltonian.cols() != rho.dim())
    throw Error(ErrorKind::DimensionMismatch, "internal_energy: H and rho dimensions differ");
  const Complex u = (rho.matrix() * hamiltonian).trace();
  if (std::abs(u.imag()) > 1e-10)
    throw Error(ErrorKind::InvalidState,
                "Tr(rho H) has imaginary part " + std::to_string(u.imag()));
  return u.real();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector p = clipped_spectrum(hermitian_eigen(rho.matrix()).eigenvalues);
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) >= 1e-14) s -= p(i) * std::log(p(i));
  return std::clamp(s, 0.0, std::log(static_cast<double>(rho.dim())));
}

double steady_internal_energy(const ModelParams& family, Temperature t1, Temperature t2) {
  const ModelParams p = with_temperatures(family, t1, t2);
  const LindbladModel model = make_model(p);
  return internal_energy(solve_steady_state(model), model.hamiltonian);
}

double specific_heat(const ModelParams& family, Bath bath, Temperature t1, Temperature t2) {
  const int which = static_cast<int>(bath);
  const double t = which == 1 ? t1.value() : t2.value();
  if (!(t > 0.0))
    throw Error(ErrorKind::InvalidParams, "specific heat needs T" + std::to_string(which) + " > 0");
  const double h = std::max(1e-4 * t, 1e-6);
  auto energy_at = [&](double ti) {
    const Temperature shifted(ti);
    return which == 1 ? steady_internal_energy(family, shifted, t2)
                      : steady_internal_energy(family, t1, shifted);
  };
  if (t > h) return (energy_at(t + h) - energy_at(t - h)) / (2.0 * h);
  // Too close to T = 0 for a central stencil: second-order forward difference.
  return (-3.0 * energy_at(t) + 4.0 * energy_at(t + h) - energy_at(t + 2.0 * h)) / (2.0 * h);
}

DensityMatrix gibbs_state(const ComplexMatrix& hamiltonian, Temperature t) {
  const HermitianEigen eig = hermitian_eigen(hamiltonian);
  const RealVector& e = eig.eigenvalues;
  const double e_min = e(0);
  RealVector w(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (t.value() == 0.0)
      w(i) = (e(i) - e_min) <= 1e-10 ? 1.0 : 0.0;
    else
      w(i) = std::exp(-(e(i) - e_min) / t.value());
  }
  w /= w.sum();
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix rho = v * w.cast<Complex>().asDiagonal() * v.adjoint();
  return DensityMatrix::sanitized(rho);
}

double uhlmann_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim())
    throw Error(ErrorKind::DimensionMismatch, "uhlmann_fidelity: dimensions differ");
  const ComplexMatrix s = psd_sqrt(rho1.matrix());
  const ComplexMatrix inner = s * rho2.matrix() * s;
  try {
    return psd_sqrt(inner).trace().real();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NegativeEigenvalue) throw;
    throw Error(ErrorKind::InvalidState, std::string("uhlmann_fidelity: ") + e.what());
  }
}

std::vector<EigenPopulation> eigenbasis_populations(const DensityMatrix& rho,
                                                    const ComplexMatrix& hamiltonian) {
  if (hamiltonian.rows() != rho.dim() || hamiltonian.cols() != rho.dim())
    throw Error(ErrorKind::DimensionMismatch, "eigenbasis_populations: dimensions differ");
  const HermitianEigen eig = hermitian_eigen(hamiltonian);
  std::vector<EigenPopulation> out;
  out.reserve(static_cast<std::size_t>(rho.dim()));
  for (int k = 0; k < rho.dim(); ++k) {
    const auto v = eig.eigenvectors.col(k);
    const double p = (v.adjoint() * rho.matrix() * v).value().real();
    out.push_back({eig.eigenvalues(k), p});
  }
  return out;
}

}  // namespace opensteady
