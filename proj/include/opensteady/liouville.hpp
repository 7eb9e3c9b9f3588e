#pragma once

// Lindblad models and their superoperators.
//
// Vectorization is row-major: vec(ρ)[m·N + n] = ρ(m, n), i.e. the composite
// state Σ ρ_mn |m⟩|n⟩ with the system on the first tensor factor and the
// ancilla on the second. Under this convention A ρ B ↦ (A ⊗ Bᵀ) vec(ρ).

#include <vector>

#include "opensteady/numkernel.hpp"

namespace opensteady {

/// One dissipator term r·(L ρ L† − ½{L†L, ρ}).
struct DissipationChannel {
  double rate = 0.0;
  ComplexMatrix jump_operator;
};

/// dρ/dt = −i[H, ρ] + Σ_k r_k (L_k ρ L_k† − ½{L_k†L_k, ρ}).
struct LindbladModel {
  ComplexMatrix hamiltonian;
  std::vector<DissipationChannel> channels;

  int dim() const { return static_cast<int>(hamiltonian.rows()); }

  /// Throws NotSquare, NotHermitian, DimensionMismatch or InvalidParams
  /// (negative or non-finite rate).
  void validate() const;
};

struct Superoperator {
  int system_dim = 0;
  SparseComplexMatrix matrix;  // (N² × N²)

  int dim() const { return system_dim * system_dim; }
  int index(int m, int n) const { return m * system_dim + n; }
};

/// Liouvillian 𝓛 with d vec(ρ)/dt = 𝓛 vec(ρ).
Superoperator build_superoperator(const LindbladModel& model);

/// 𝓗_eff = 𝓗⊗I − I⊗𝓗^A + i Σ_k r_k L_k⊗L_k^A, where 𝓗 = H − (i/2)Σ_k r_k L_k†L_k
/// and the ancilla copy O^A has entries ⟨m|O^A|n⟩ = ⟨n|O†|m⟩, i.e. the entrywise
/// complex conjugate of O. Equals i·𝓛.
Superoperator build_effective_hamiltonian(const LindbladModel& model);

/// Matrix-form right-hand side dρ/dt; never forms the N²×N² operator.
ComplexMatrix apply_rhs(const LindbladModel& model, const ComplexMatrix& rho);

/// apply_rhs with the non-Hermitian part K = H − (i/2)Σ r L†L precomputed,
/// for repeated evaluation by the propagator:
///   dρ/dt = −i(Kρ − ρK†) + Σ r L ρ L†.
class LindbladGenerator {
 public:
  explicit LindbladGenerator(const LindbladModel& model);

  ComplexMatrix operator()(const ComplexMatrix& rho) const;
  int dim() const { return static_cast<int>(k_.rows()); }

 private:
  struct Jump {
    double rate;
    ComplexMatrix op;
    ComplexMatrix op_dagger;
  };
  ComplexMatrix k_;
  std::vector<Jump> jumps_;
};

/// vec / unvec in the row-major convention above.
ComplexVector vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const ComplexVector& v, int dim);

}  // namespace opensteady
