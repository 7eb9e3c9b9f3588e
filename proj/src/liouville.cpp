#include "opensteady/liouville.hpp"

#include <cmath>
#include <string>

#include "opensteady/error.hpp"

namespace opensteady {

namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

void LindbladModel::validate() const {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw Error(ErrorKind::NotSquare, "hamiltonian is not square");
  if (!all_finite(hamiltonian)) throw Error(ErrorKind::InvalidParams, "hamiltonian not finite");
  const double asym = inf_norm(ComplexMatrix(hamiltonian - hamiltonian.adjoint()));
  if (asym > 1e-12 * inf_norm(hamiltonian))
    throw Error(ErrorKind::NotHermitian, "hamiltonian is not Hermitian");
  for (std::size_t k = 0; k < channels.size(); ++k) {
    const auto& c = channels[k];
    if (c.jump_operator.rows() != dim() || c.jump_operator.cols() != dim())
      throw Error(ErrorKind::DimensionMismatch,
                  "channel " + std::to_string(k) + " operator dimension differs from H");
    if (!std::isfinite(c.rate) || c.rate < 0.0)
      throw Error(ErrorKind::InvalidParams,
                  "channel " + std::to_string(k) + " has rate " + std::to_string(c.rate));
  }
}

Superoperator build_superoperator(const LindbladModel& model) {
  model.validate();
  const int n = model.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  std::vector<Triplet> t;

  append_kron(model.hamiltonian, id, -kI, t);
  append_kron(id, model.hamiltonian.transpose(), kI, t);
  for (const auto& c : model.channels) {
    if (c.rate == 0.0) continue;
    const ComplexMatrix& l = c.jump_operator;
    const ComplexMatrix ldl = l.adjoint() * l;
    append_kron(l, l.conjugate(), c.rate, t);
    append_kron(ldl, id, -0.5 * c.rate, t);
    append_kron(id, ldl.transpose(), -0.5 * c.rate, t);
  }
  return {n, from_triplets(n * n, t)};
}

Superoperator build_effective_hamiltonian(const LindbladModel& model) {
  model.validate();
  const int n = model.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  ComplexMatrix h_nh = model.hamiltonian;
  for (const auto& c : model.channels)
    h_nh -= 0.5 * kI * c.rate * (c.jump_operator.adjoint() * c.jump_operator);

  // Ancilla copy of an operator: ⟨m|O^A|n⟩ = ⟨n|O†|m⟩ = conj(O(m, n)).
  auto ancilla = [](const ComplexMatrix& o) -> ComplexMatrix { return o.adjoint().transpose(); };

  std::vector<Triplet> t;
  append_kron(h_nh, id, 1.0, t);
  append_kron(id, ancilla(h_nh), -1.0, t);
  for (const auto& c : model.channels) {
    if (c.rate == 0.0) continue;
    append_kron(c.jump_operator, ancilla(c.jump_operator), kI * c.rate, t);
  }
  return {n, from_triplets(n * n, t)};
}

LindbladGenerator::LindbladGenerator(const LindbladModel& model) {
  model.validate();
  k_ = model.hamiltonian;
  for (const auto& c : model.channels) {
    if (c.rate == 0.0) continue;
    const ComplexMatrix& l = c.jump_operator;
    k_ -= 0.5 * kI * c.rate * (l.adjoint() * l);
    jumps_.push_back({c.rate, l, l.adjoint()});
  }
}

ComplexMatrix LindbladGenerator::operator()(const ComplexMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim())
    throw Error(ErrorKind::DimensionMismatch, "apply_rhs: rho dimension differs from model");
  ComplexMatrix out = -kI * (k_ * rho);
  out.noalias() += kI * (rho * k_.adjoint());
  for (const auto& j : jumps_) out.noalias() += j.rate * (j.op * rho * j.op_dagger);
  return out;
}

ComplexMatrix apply_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
  if (rho.rows() != model.dim() || rho.cols() != model.dim())
    throw Error(ErrorKind::DimensionMismatch, "apply_rhs: rho dimension differs from model");
  return LindbladGenerator(model)(rho);
}

ComplexVector vectorize(const ComplexMatrix& rho) {
  ComplexVector v(rho.size());
  for (Eigen::Index m = 0; m < rho.rows(); ++m)
    for (Eigen::Index n = 0; n < rho.cols(); ++n) v(m * rho.cols() + n) = rho(m, n);
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw Error(ErrorKind::DimensionMismatch, "unvectorize: length is not dim²");
  ComplexMatrix rho(dim, dim);
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) rho(m, n) = v(m * dim + n);
  return rho;
}

}  // namespace opensteady
