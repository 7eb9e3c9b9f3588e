#include "opensteady/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opensteady/error.hpp"

namespace opensteady {

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw Error(ErrorKind::InvalidState, "density matrix must be square and nonempty");
  if (!all_finite(matrix_)) throw Error(ErrorKind::InvalidState, "density matrix not finite");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidState, "trace " + std::to_string(tr.real()) + " differs from 1");
  if (inf_norm(ComplexMatrix(matrix_ - matrix_.adjoint())) > 1e-10)
    throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (matrix_ + matrix_.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kPsdClip)
    throw Error(ErrorKind::InvalidState,
                "eigenvalue " + std::to_string(eig.eigenvalues().minCoeff()) + " below -1e-8");
}

DensityMatrix DensityMatrix::sanitized(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || !all_finite(m))
    throw Error(ErrorKind::InvalidState, "cannot sanitize a non-square or non-finite matrix");
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (!(std::abs(tr) > 0.0)) throw Error(ErrorKind::InvalidState, "zero trace");
  h /= tr;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::ComputeEigenvectors);
  RealVector p = eig.eigenvalues();
  if (p.minCoeff() < -kPsdClip)
    throw Error(ErrorKind::InvalidState,
                "eigenvalue " + std::to_string(p.minCoeff()) + " below -1e-8");
  if (p.minCoeff() < 0.0) {
    p = p.cwiseMax(0.0);
    p /= p.sum();
    const ComplexMatrix& v = eig.eigenvectors();
    h = v * p.cast<Complex>().asDiagonal() * v.adjoint();
    h = 0.5 * (h + h.adjoint());
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::InvalidState, "zero state vector");
  const ComplexVector u = psi / norm;
  return sanitized(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, "trace_distance: dimensions differ");
  const ComplexMatrix d = a.matrix() - b.matrix();
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (d + d.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

}  // namespace opensteady
