#pragma once

// Reference computations used only by the tests. None of them goes through
// hermitian_eig, psd_sqrt, permute_qubits or the concurrence routines.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "conclab/matrix.hpp"

namespace conclab::oracle {

// Reduced state on `keep` (1-based qubits, ascending) by explicit index sums.
ComplexMatrix partial_trace_keep(const ComplexMatrix& rho, int n_qubits, const std::vector<int>& keep);

// sqrt(2 (1 - Tr rho_B^2)) for a pure rho, reduced onto `block2`.
double pure_state_concurrence(const ComplexMatrix& pure_rho, int n_qubits, const std::vector<int>& block2);

// Characteristic polynomial coefficients c_0..c_n of det(x I - M), monic
// (c_n = 1), by Faddeev-LeVerrier.
std::vector<Complex> characteristic_polynomial(const ComplexMatrix& m);

// All roots of a polynomial with coefficients c_0..c_n (Durand-Kerner, then
// Newton polishing).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

// Eigenvalues of a general square matrix as characteristic-polynomial roots,
// sorted by descending real part.
std::vector<Complex> charpoly_eigenvalues(const ComplexMatrix& m);

// Wootters concurrence with lambdas from the roots of the characteristic
// polynomial of the non-Hermitian rho (sy sy) rho* (sy sy).
double wootters_charpoly(const ComplexMatrix& rho);

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng);
// (A A^dagger) / Tr with A of shape dim x rank.
ComplexMatrix random_density(std::size_t dim, std::size_t rank, std::mt19937_64& rng);
ComplexMatrix random_unitary_2x2(std::mt19937_64& rng);

// sum_i K_i rho K_i^dagger with explicit (x)-product Kraus operators.
ComplexMatrix naive_apply(const std::vector<std::vector<ComplexMatrix>>& per_qubit_ops, const ComplexMatrix& rho);

}  // namespace conclab::oracle
