#include "conclab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace conclab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::InvalidTrace: return "InvalidTrace";
    case ErrorCode::DimNotPowerOfTwo: return "DimNotPowerOfTwo";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::IncompleteChannel: return "IncompleteChannel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidAssignment: return "InvalidAssignment";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::InvalidBipartition: return "InvalidBipartition";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::SpectralLeak: return "SpectralLeak";
  }
  return "Unknown";
}

namespace {

void check_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NotFinite, "matrix entry is not finite");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::NotSquare, "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                          std::to_string(entries_.size()));
  }
  check_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::NotSquare, "ragged or non-square rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  }
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r = *this;
  for (auto& z : r.entries_) z = std::conj(z);
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_residual() const {
  double r = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  const std::size_t n = a.dim_;
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<Complex> r(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix r(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) r(i * db + k, j * db + l) = aij * b(k, l);
      }
    }
  }
  return r;
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double herm_tol) {
  const std::size_t n = m.dim();
  if (m.hermiticity_residual() > herm_tol) {
    throw Error(ErrorCode::NotHermitian,
                "residual " + std::to_string(m.hermiticity_residual()) + " exceeds tolerance");
  }

  // Work on the exactly Hermitian part so roundoff asymmetry cannot stall
  // the sweeps.
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex mean = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob2 = 0.0;
  for (const auto& z : a.data()) frob2 += std::norm(z);
  const double eps = std::numeric_limits<double>::epsilon();
  const double stop2 = eps * eps * frob2;

  auto off_norm2 = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    }
    return s;
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off2 = off_norm2();
    if (off2 <= stop2 || off2 < std::numeric_limits<double>::min()) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Real rotation for the phase-stripped 2x2 block [[app, r], [r, aqq]].
        const double theta = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U = D * R with D = diag(1, e^{-i phi}) on (p, q):
        //   U_pp = c, U_pq = s, U_qp = -s e^{-i phi}, U_qq = c e^{-i phi}.
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        // A <- A U (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        // A <- U^dagger A (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double herm_tol) {
  const auto eig = hermitian_eig(m, herm_tol);
  const std::size_t n = m.dim();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (lambda < -kClampTol) {
      throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(lambda) + " below -1e-8");
    }
    roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (roots[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * roots[k];
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return r;
}

int qubit_count(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::DimNotPowerOfTwo, "dimension " + std::to_string(dim));
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

namespace {

void validate_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::InvalidPermutation,
                "expected " + std::to_string(n) + " entries, got " + std::to_string(perm.size()));
  }
  std::vector<bool> seen(n + 1, false);
  for (int q : perm) {
    if (q < 1 || q > n || seen[q]) {
      throw Error(ErrorCode::InvalidPermutation, "not a permutation of 1.." + std::to_string(n));
    }
    seen[q] = true;
  }
}

// source[out_index] = input basis index whose bits land at out_index.
std::vector<std::size_t> index_map(std::span<const int> perm, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::size_t> source(dim);
  for (std::size_t out = 0; out < dim; ++out) {
    std::size_t in = 0;
    for (int k = 0; k < n; ++k) {
      // Output qubit k+1 occupies bit (n-1-k); it carries input qubit perm[k].
      const std::size_t bit = (out >> (n - 1 - k)) & 1U;
      in |= bit << (n - perm[k]);
    }
    source[out] = in;
  }
  return source;
}

}  // namespace

ComplexMatrix permute_qubits(const ComplexMatrix& m, std::span<const int> perm) {
  const int n = qubit_count(m.dim());
  validate_permutation(perm, n);
  const auto source = index_map(perm, n);
  ComplexMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m(source[i], source[j]);
  }
  return r;
}

std::vector<Complex> permute_qubits(std::span<const Complex> ket, std::span<const int> perm) {
  const int n = qubit_count(ket.size());
  validate_permutation(perm, n);
  const auto source = index_map(perm, n);
  std::vector<Complex> r(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i) r[i] = ket[source[i]];
  return r;
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  validate_permutation(perm, static_cast<int>(perm.size()));
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k] - 1] = static_cast<int>(k) + 1;
  return inv;
}

}  // namespace conclab
