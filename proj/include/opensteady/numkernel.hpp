#pragma once

// Complex linear-algebra kernel: dense and CSR sparse matrices, Kronecker
// products, Hermitian eigendecomposition and matrix functions, and a sparse
// direct solve. Dense storage and the factorizations are provided by Eigen.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace opensteady {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Square compressed-sparse-row matrix.
using SparseComplexMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor, int>;
using Triplet = Eigen::Triplet<Complex, int>;

struct HermitianEigen {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // orthonormal columns
};

/// Which eigenvalues a Hermitian matrix function accepts.
enum class SpectrumDomain {
  Any,
  // Eigenvalues in [-1e-8, 0) are clipped to 0; anything lower throws
  // NegativeEigenvalue.
  NonNegative,
};

inline constexpr double kPsdClip = 1e-8;

/// Maximum absolute row sum.
double inf_norm(const ComplexMatrix& a);
double inf_norm(const SparseComplexMatrix& a);
double inf_norm(const ComplexVector& v);

/// True when every entry is finite.
bool all_finite(const ComplexMatrix& a);

/// Kronecker product; (a⊗b)(i·p+k, j·q+l) = a(i,j)·b(k,l) for b of shape p×q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Appends scale·(a⊗b) to `out`, skipping exact zeros of a and b. Used by the
/// superoperator builders so that N²×N² operators are never densified.
void append_kron(const ComplexMatrix& a, const ComplexMatrix& b, Complex scale,
                 std::vector<Triplet>& out);

/// CSR assembly with duplicate summation.
SparseComplexMatrix from_triplets(int dim, const std::vector<Triplet>& triplets);

/// Eigendecomposition of a Hermitian matrix. The input is Hermitized first;
/// throws NotSquare, or NotHermitian when ‖a − a†‖∞ > 1e-10·‖a‖∞.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

/// V f(Λ) V†, Hermitized.
ComplexMatrix hermitian_matrix_function(const ComplexMatrix& a,
                                        const std::function<double(double)>& f,
                                        SpectrumDomain domain = SpectrumDomain::Any);

/// Principal square root of a positive-semidefinite matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Clips eigenvalues per SpectrumDomain::NonNegative and returns them.
RealVector clipped_spectrum(const RealVector& eigenvalues);

/// Direct solve m·x = rhs by sparse LU with partial pivoting.
/// Throws SingularMatrix on an exactly zero pivot or one below 1e-13·‖m‖∞.
ComplexVector sparse_solve(const SparseComplexMatrix& m, const ComplexVector& rhs);

}  // namespace opensteady
