#include "opensteady/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SparseLU>

#include "opensteady/error.hpp"

namespace opensteady {

double inf_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double inf_norm(const SparseComplexMatrix& a) {
  double best = 0.0;
  for (int r = 0; r < a.outerSize(); ++r) {
    double row = 0.0;
    for (SparseComplexMatrix::InnerIterator it(a, r); it; ++it) row += std::abs(it.value());
    best = std::max(best, row);
  }
  return best;
}

double inf_norm(const ComplexVector& v) {
  if (v.size() == 0) return 0.0;
  return v.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index p = b.rows();
  const Eigen::Index q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * p, j * q, p, q) = a(i, j) * b;
  return out;
}

namespace {

struct Entry {
  int row;
  int col;
  Complex value;
};

std::vector<Entry> nonzeros(const ComplexMatrix& a) {
  std::vector<Entry> out;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != Complex(0.0, 0.0)) out.push_back({i, j, a(i, j)});
  return out;
}

}  // namespace

void append_kron(const ComplexMatrix& a, const ComplexMatrix& b, Complex scale,
                 std::vector<Triplet>& out) {
  const auto an = nonzeros(a);
  const auto bn = nonzeros(b);
  const int p = static_cast<int>(b.rows());
  const int q = static_cast<int>(b.cols());
  out.reserve(out.size() + an.size() * bn.size());
  for (const auto& x : an)
    for (const auto& y : bn)
      out.emplace_back(x.row * p + y.row, x.col * q + y.col, scale * x.value * y.value);
}

SparseComplexMatrix from_triplets(int dim, const std::vector<Triplet>& triplets) {
  SparseComplexMatrix m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorKind::NotSquare, "hermitian_eigen: " + std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()));
  const double scale = inf_norm(a);
  const double asym = inf_norm(ComplexMatrix(a - a.adjoint()));
  if (asym > 1e-10 * scale)
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eigen: asymmetry " + std::to_string(asym) + " exceeds tolerance");
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector clipped_spectrum(const RealVector& eigenvalues) {
  RealVector out = eigenvalues;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -kPsdClip)
      throw Error(ErrorKind::NegativeEigenvalue,
                  "eigenvalue " + std::to_string(out(i)) + " below -1e-8");
    out(i) = std::max(out(i), 0.0);
  }
  return out;
}

ComplexMatrix hermitian_matrix_function(const ComplexMatrix& a,
                                        const std::function<double(double)>& f,
                                        SpectrumDomain domain) {
  const HermitianEigen eig = hermitian_eigen(a);
  RealVector lambda = domain == SpectrumDomain::NonNegative ? clipped_spectrum(eig.eigenvalues)
                                                             : eig.eigenvalues;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) lambda(i) = f(lambda(i));
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out = v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  return hermitian_matrix_function(a, [](double x) { return std::sqrt(x); },
                                   SpectrumDomain::NonNegative);
}

ComplexVector sparse_solve(const SparseComplexMatrix& m, const ComplexVector& rhs) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NotSquare, "sparse_solve: matrix is not square");
  if (rhs.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "sparse_solve: rhs length differs from matrix");

  using ColMajor = Eigen::SparseMatrix<Complex, Eigen::ColMajor, int>;
  const ColMajor a = m;
  Eigen::SparseLU<ColMajor, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success)
    throw Error(ErrorKind::SingularMatrix, "sparse_solve: " + lu.lastErrorMessage());

  // The diagonal of U lives in the supernodal L store, as in
  // SparseLU::absDeterminant().
  const double tiny = 1e-13 * inf_norm(m);
  const auto& lstore = lu.matrixL().m_mapL;
  for (Eigen::Index j = 0; j < lstore.cols(); ++j) {
    for (typename std::decay_t<decltype(lstore)>::InnerIterator it(lstore, j); it; ++it) {
      if (it.index() == j) {
        if (!(std::abs(it.value()) > tiny))
          throw Error(ErrorKind::SingularMatrix,
                      "sparse_solve: pivot " + std::to_string(std::abs(it.value())) +
                          " at column " + std::to_string(j));
        break;
      }
    }
  }

  ComplexVector x = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !x.allFinite())
    throw Error(ErrorKind::SingularMatrix, "sparse_solve: back substitution failed");
  return x;
}

}  // namespace opensteady
