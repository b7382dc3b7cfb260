#include "conclab/density.hpp"

#include <cmath>
#include <string>

namespace conclab {

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  n_qubits_ = qubit_count(matrix_.dim());
  const double herm = matrix_.hermiticity_residual();
  if (herm > kHermitianTol) {
    throw Error(ErrorCode::NotHermitian, "density matrix residual " + std::to_string(herm));
  }
  if (trace_residual() > kTraceTol) {
    throw Error(ErrorCode::InvalidTrace,
                "trace deviates from 1 by " + std::to_string(trace_residual()));
  }
  spectrum_ = hermitian_eig(matrix_);
  if (spectrum_.values.back() < -kNegativeEigTol) {
    throw Error(ErrorCode::NotPSD,
                "minimum eigenvalue " + std::to_string(spectrum_.values.back()));
  }
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> ket) {
  return DensityMatrix(ComplexMatrix::outer(ket));
}

int DensityMatrix::rank(double tol) const {
  int r = 0;
  for (double v : spectrum_.values) r += v > tol ? 1 : 0;
  return r;
}

double DensityMatrix::trace_residual() const {
  return std::abs(matrix_.trace() - Complex(1.0, 0.0));
}

int numerical_rank(const DensityMatrix& rho, double tol) { return rho.rank(tol); }

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> perm) {
  return DensityMatrix(permute_qubits(rho.matrix(), perm));
}

}  // namespace conclab
