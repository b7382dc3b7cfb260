#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "conclab/error.hpp"

namespace conclab {

using Complex = std::complex<double>;

// Default Hermiticity tolerance (max |M - M^dagger| entrywise).
inline constexpr double kHermitianTol = 1e-10;

// Eigenvalues in [-kClampTol, 0) are treated as roundoff and clamped to zero.
inline constexpr double kClampTol = 1e-8;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix outer(std::span<const Complex> ket);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> data() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  // Largest entrywise magnitude.
  double max_abs() const;
  // max |M - M^dagger| entrywise.
  double hermiticity_residual() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// max |a - b| entrywise; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
}  // namespace pauli

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic Jacobi eigensolver for Hermitian matrices.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol = kHermitianTol);

// Hermitian PSD square root; eigenvalues in [-kClampTol, 0) are clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double herm_tol = kHermitianTol);

// Number of qubits n with dim == 2^n; throws DimNotPowerOfTwo otherwise.
int qubit_count(std::size_t dim);

// Relabels qubits so that output qubit k is input qubit perm[k]. Qubits are
// 1-based and big-endian (qubit 1 is the leftmost tensor factor).
ComplexMatrix permute_qubits(const ComplexMatrix& m, std::span<const int> perm);
std::vector<Complex> permute_qubits(std::span<const Complex> ket, std::span<const int> perm);

std::vector<int> inverse_permutation(std::span<const int> perm);

}  // namespace conclab
