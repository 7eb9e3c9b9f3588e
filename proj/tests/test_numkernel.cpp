#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "opensteady/error.hpp"
#include "opensteady/numkernel.hpp"
#include "test_support.hpp"

using namespace opensteady;
using namespace opensteady::testing;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<int>(values.size()),
                                        static_cast<int>(values.size()));
  int i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an opensteady::Error");
  return ErrorKind::InvalidState;
}

}  // namespace

TEST_CASE("kron of Pauli Z with identity") {
  const ComplexMatrix z = diag({1.0, -1.0});
  CHECK(max_abs(kron(z, ComplexMatrix::Identity(2, 2)) - diag({1, 1, -1, -1})) == 0.0);
  CHECK(max_abs(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) -
                ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("kron index convention on rectangular factors") {
  std::mt19937_64 rng(7);
  const ComplexMatrix a = random_matrix(rng, 2, 3);
  const ComplexMatrix b = random_matrix(rng, 4, 2);
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 8);
  REQUIRE(k.cols() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 2; ++q) CHECK(k(i * 4 + p, j * 2 + q) == a(i, j) * b(p, q));
}

TEST_CASE("kron mixed-product identity and bilinearity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    const ComplexMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    CHECK(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)) < 1e-12);
    const Complex s(0.3, -1.7);
    CHECK(max_abs(kron(a + s * c, b) - kron(a, b) - s * kron(c, b)) < 1e-12);
    CHECK(max_abs(kron(a, b + s * d) - kron(a, b) - s * kron(a, d)) < 1e-12);
  }
}

TEST_CASE("append_kron matches dense kron") {
  std::mt19937_64 rng(5);
  ComplexMatrix a = random_matrix(rng, 3, 3);
  a(0, 2) = 0.0;
  const ComplexMatrix b = random_matrix(rng, 3, 3);
  std::vector<Triplet> t;
  append_kron(a, b, Complex(0.0, 2.0), t);
  append_kron(b, a, 1.0, t);  // duplicates are summed
  const ComplexMatrix dense = from_triplets(9, t).toDense();
  CHECK(max_abs(dense - Complex(0.0, 2.0) * kron(a, b) - kron(b, a)) < 1e-14);
}

TEST_CASE("hermitian_eigen on Pauli matrices") {
  const auto z = hermitian_eigen(diag({1.0, -1.0}));
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0));

  const auto x = hermitian_eigen(pauli_x());
  CHECK(x.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(x.eigenvalues(1) == doctest::Approx(1.0));
  // (|0⟩ − |1⟩)/√2 and (|0⟩ + |1⟩)/√2 up to phase
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(x.eigenvectors(0, 0)) == doctest::Approx(r));
  CHECK(std::abs(x.eigenvectors(0, 0) + x.eigenvectors(1, 0)) < 1e-12);
  CHECK(std::abs(x.eigenvectors(0, 1) - x.eigenvectors(1, 1)) < 1e-12);
}

TEST_CASE("hermitian_eigen reconstruction and orthonormality") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = random_hermitian(rng, 6);
    const auto e = hermitian_eigen(a);
    const ComplexMatrix& v = e.eigenvectors;
    for (int i = 1; i < 6; ++i) CHECK(e.eigenvalues(i) >= e.eigenvalues(i - 1));
    const ComplexMatrix rebuilt = v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    CHECK(inf_norm(ComplexMatrix(rebuilt - a)) <= 1e-10 * inf_norm(a));
    CHECK(inf_norm(ComplexMatrix(v.adjoint() * v - ComplexMatrix::Identity(6, 6))) <= 1e-10);
    for (int i = 0; i < 6; ++i)
      CHECK((a * v.col(i) - e.eigenvalues(i) * v.col(i)).norm() <= 1e-10 * inf_norm(a));
  }
}

TEST_CASE("hermitian_eigen error paths") {
  CHECK(kind_of([] { hermitian_eigen(ComplexMatrix::Zero(2, 3)); }) == ErrorKind::NotSquare);
  ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK(kind_of([&] { hermitian_eigen(skew); }) == ErrorKind::NotHermitian);
  // Asymmetry far below tolerance is Hermitized away.
  ComplexMatrix near = pauli_x();
  near(0, 1) += 1e-13;
  CHECK_NOTHROW(hermitian_eigen(near));
}

TEST_CASE("square roots of PSD matrices") {
  CHECK(max_abs(psd_sqrt(ComplexMatrix::Identity(2, 2)) - ComplexMatrix::Identity(2, 2)) < 1e-14);
  CHECK(max_abs(psd_sqrt(diag({4.0, 9.0})) - diag({2.0, 3.0})) < 1e-14);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix g = random_matrix(rng, 4, 4);
    const ComplexMatrix a = g * g.adjoint();
    const ComplexMatrix s = psd_sqrt(a);
    CHECK(max_abs(s * s - a) < 1e-9);
  }
}

TEST_CASE("PSD clipping") {
  CHECK(max_abs(psd_sqrt(diag({-5e-9, 1.0})) - diag({0.0, 1.0})) < 1e-14);
  CHECK(kind_of([] { psd_sqrt(diag({-1e-6, 1.0})); }) == ErrorKind::NegativeEigenvalue);
}

TEST_CASE("exp(ln A) = A for PSD A with spectrum in [1e-6, 10]") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> spectrum(std::log(1e-6), std::log(10.0));
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5;
    // Random unitary from the QR of a Gaussian matrix.
    const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(random_matrix(rng, n, n))
                                .householderQ() * ComplexMatrix::Identity(n, n);
    RealVector lam(n);
    for (int i = 0; i < n; ++i) lam(i) = std::exp(spectrum(rng));
    ComplexMatrix a = q * lam.cast<Complex>().asDiagonal() * q.adjoint();
    a = 0.5 * (a + a.adjoint());
    const ComplexMatrix ln = hermitian_matrix_function(
        a, [](double x) { return std::log(x); }, SpectrumDomain::NonNegative);
    const ComplexMatrix back = hermitian_matrix_function(ln, [](double x) { return std::exp(x); });
    CHECK(max_abs(back - a) < 1e-8);
  }
}

TEST_CASE("sparse_solve small systems") {
  std::vector<Triplet> t{{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}};
  ComplexVector e0 = ComplexVector::Zero(3);
  e0(0) = 1.0;
  CHECK(max_abs(sparse_solve(from_triplets(3, t), e0) - e0) == 0.0);

  std::vector<Triplet> d{{0, 0, 2.0}, {1, 1, 4.0}};
  ComplexVector rhs(2);
  rhs << 2.0, 2.0;
  const ComplexVector x = sparse_solve(from_triplets(2, d), rhs);
  CHECK(std::abs(x(0) - 1.0) < 1e-15);
  CHECK(std::abs(x(1) - 0.5) < 1e-15);
}

TEST_CASE("sparse_solve agrees with dense Gaussian elimination") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> pick(0, 99);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 100;
    std::vector<Triplet> t;
    for (int i = 0; i < n; ++i) t.emplace_back(i, i, Complex(10.0 + g(rng), g(rng)));
    for (int k = 0; k < 4 * n; ++k) t.emplace_back(pick(rng), pick(rng), Complex(g(rng), g(rng)));
    const SparseComplexMatrix m = from_triplets(n, t);
    const ComplexVector b = random_matrix(rng, n, 1);
    const ComplexVector x = sparse_solve(m, b);
    const ComplexVector ref = dense_solve_oracle(m.toDense(), b);
    CHECK(inf_norm(ComplexVector(m * x - b)) <= 1e-9 * (inf_norm(m) * inf_norm(x) + inf_norm(b)));
    CHECK(inf_norm(ComplexVector(x - ref)) < 1e-9);
  }
}

TEST_CASE("sparse_solve matches dense solve for every dim up to 64") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 64; ++n) {
    ComplexMatrix a = random_matrix(rng, n, n) + 4.0 * ComplexMatrix::Identity(n, n);
    std::vector<Triplet> t;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.emplace_back(i, j, a(i, j));
    const ComplexVector b = random_matrix(rng, n, 1);
    const ComplexVector x = sparse_solve(from_triplets(n, t), b);
    CHECK(inf_norm(ComplexVector(x - dense_solve_oracle(a, b))) < 1e-9);
  }
}

TEST_CASE("sparse_solve reports singular systems") {
  std::vector<Triplet> zero_col{{0, 0, 1.0}, {1, 0, 1.0}};
  ComplexVector b = ComplexVector::Ones(2);
  CHECK(kind_of([&] { sparse_solve(from_triplets(2, zero_col), b); }) ==
        ErrorKind::SingularMatrix);
  // Numerically rank deficient: row 2 = row 0 + row 1.
  std::vector<Triplet> dependent{{0, 0, 1.0}, {0, 1, 2.0}, {1, 1, 1.0}, {1, 2, 3.0},
                                 {2, 0, 1.0}, {2, 1, 3.0}, {2, 2, 3.0}};
  b = ComplexVector::Ones(3);
  CHECK(kind_of([&] { sparse_solve(from_triplets(3, dependent), b); }) ==
        ErrorKind::SingularMatrix);
}

TEST_CASE("infinity norms") {
  ComplexMatrix m(2, 2);
  m << Complex(3, 4), 1.0, 0.0, -2.0;
  CHECK(inf_norm(m) == doctest::Approx(6.0));
  CHECK(inf_norm(SparseComplexMatrix(m.sparseView())) == doctest::Approx(6.0));
}
