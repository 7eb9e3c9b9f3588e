#pragma once

#include "opensteady/numkernel.hpp"

namespace opensteady {

/// Trace-one Hermitian positive-semidefinite matrix.
///
/// Construction validates: trace 1 within 1e-10, Hermitian within 1e-10,
/// eigenvalues ≥ −1e-8. Violations throw InvalidState.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// Hermitizes, clips eigenvalues in (−1e-8, 0) to zero and renormalizes
  /// before validating. Throws InvalidState if the input is not close to a
  /// state (zero trace or an eigenvalue below −1e-8 after normalization).
  static DensityMatrix sanitized(const ComplexMatrix& m);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(int m, int n) const { return matrix_(m, n); }

 private:
  ComplexMatrix matrix_;
};

/// ½‖a − b‖₁.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace opensteady
