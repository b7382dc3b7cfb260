#include <doctest.h>

#include <random>

#include "conclab/density.hpp"
#include "conclab/error.hpp"
#include "conclab/matrix.hpp"
#include "oracles.hpp"

using namespace conclab;

TEST_CASE("kron of paulis") {
  const auto xz = kron(pauli::X(), pauli::Z());
  CHECK(xz.dim() == 4);
  CHECK(xz(0, 2) == Complex(1.0));
  CHECK(xz(1, 3) == Complex(-1.0));
  CHECK(xz(2, 0) == Complex(1.0));
  CHECK(xz(0, 0) == Complex(0.0));
}

TEST_CASE("hermitian_eig reconstructs random hermitian matrices") {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 15);
    const auto m = oracle::random_hermitian(dim, rng);
    const auto eig = hermitian_eig(m);
    for (std::size_t i = 1; i < dim; ++i) REQUIRE(eig.values[i - 1] >= eig.values[i]);
    ComplexMatrix recon(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          recon(i, j) += eig.values[k] * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
        }
      }
    }
    const double scale = std::max(1.0, m.max_abs());
    worst = std::max(worst, max_abs_diff(recon, m) / scale);
    const auto uu = eig.vectors.adjoint() * eig.vectors;
    worst = std::max(worst, max_abs_diff(uu, ComplexMatrix::identity(dim)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("hermitian_eig agrees with characteristic polynomial roots") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
    const auto m = oracle::random_hermitian(dim, rng);
    const auto eig = hermitian_eig(m);
    const auto roots = oracle::charpoly_eigenvalues(m);
    for (std::size_t i = 0; i < dim; ++i) CHECK(eig.values[i] == doctest::Approx(roots[i].real()).epsilon(1e-9));
  }
}

TEST_CASE("hermitian_eig rejects non-hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), Error);
}

TEST_CASE("psd_sqrt squares back") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = std::size_t{1} << (1 + trial % 3);
    const auto rho = oracle::random_density(dim, 1 + static_cast<std::size_t>(trial) % dim, rng);
    const auto r = psd_sqrt(rho);
    CHECK(max_abs_diff(r * r, rho) < 1e-12);
    CHECK(r.hermiticity_residual() < 1e-12);
  }
}

TEST_CASE("psd_sqrt rejects clearly negative spectra") {
  CHECK_THROWS_AS(psd_sqrt(pauli::Z()), Error);
}

TEST_CASE("qubit permutations") {
  SUBCASE("swap moves amplitudes") {
    std::vector<Complex> ket{0.0, 1.0, 0.0, 0.0};  // |01>
    const std::vector<int> swap{2, 1};
    const auto out = permute_qubits(ket, swap);
    CHECK(out[2] == Complex(1.0));
  }
  SUBCASE("permutation then inverse is the identity") {
    std::mt19937_64 rng(9);
    const std::vector<int> perm{3, 1, 4, 2};
    const auto inv = inverse_permutation(perm);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = oracle::random_hermitian(16, rng);
      CHECK(max_abs_diff(permute_qubits(permute_qubits(m, perm), inv), m) == 0.0);
    }
  }
  SUBCASE("matches partial trace oracle") {
    std::mt19937_64 rng(21);
    const auto rho = oracle::random_density(8, 3, rng);
    const std::vector<int> perm{3, 1, 2};
    const auto moved = permute_qubits(rho, perm);
    // new qubit 1 is old qubit 3
    const auto a = oracle::partial_trace_keep(moved, 3, {1});
    const auto b = oracle::partial_trace_keep(rho, 3, {3});
    CHECK(max_abs_diff(a, b) < 1e-15);
  }
  SUBCASE("invalid permutations") {
    const std::vector<int> bad{1, 1};
    CHECK_THROWS_AS(permute_qubits(ComplexMatrix::identity(4), bad), Error);
  }
}

TEST_CASE("density validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(4)), Error);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(3) * Complex(1.0 / 3.0)), Error);
  const std::vector<double> diag{1.2, -0.2};
  const ComplexMatrix neg = ComplexMatrix::diagonal(diag);
  CHECK_THROWS_AS(DensityMatrix{neg}, Error);
  const DensityMatrix mixed(ComplexMatrix::identity(4) * Complex(0.25));
  CHECK(mixed.rank() == 4);
  CHECK(mixed.n_qubits() == 2);
}
