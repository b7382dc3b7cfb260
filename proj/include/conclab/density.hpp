#pragma once

#include <span>
#include <vector>

#include "conclab/matrix.hpp"

namespace conclab {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigTol = 1e-10;
inline constexpr double kRankTol = 1e-10;

// Validated n-qubit state: Hermitian, unit trace, positive semidefinite.
// The spectrum is computed once at construction (the PSD check needs it) and
// kept, so rank queries and eigen-factors cost nothing afterwards.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix from_pure(std::span<const Complex> ket);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  // Descending eigenvalues and matching eigenvectors of the stored matrix.
  const EigenDecomposition& spectrum() const noexcept { return spectrum_; }

  int rank(double tol = kRankTol) const;

  double trace_residual() const;
  double min_eigenvalue() const { return spectrum_.values.back(); }

 private:
  ComplexMatrix matrix_;
  int n_qubits_ = 0;
  EigenDecomposition spectrum_;
};

int numerical_rank(const DensityMatrix& rho, double tol = kRankTol);

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> perm);

}  // namespace conclab
