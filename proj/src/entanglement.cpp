#include "conclab/entanglement.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace conclab {

Bipartition::Bipartition(std::vector<int> block1, std::vector<int> block2)
    : block1_(std::move(block1)), block2_(std::move(block2)) {
  if (block1_.empty() || block2_.empty()) {
    throw Error(ErrorCode::InvalidBipartition, "both blocks must be nonempty");
  }
  const int n = n_qubits();
  std::vector<bool> seen(n + 1, false);
  for (const auto* block : {&block1_, &block2_}) {
    for (int q : *block) {
      if (q < 1 || q > n || seen[q]) {
        throw Error(ErrorCode::InvalidBipartition,
                    fmt::format("blocks must partition 1..{} without repeats", n));
      }
      seen[q] = true;
    }
  }
}

Bipartition Bipartition::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw Error(ErrorCode::InvalidBipartition, "expected '|' in cut '" + std::string(text) + "'");
  }
  auto parse_block = [&](std::string_view part) {
    std::vector<int> qubits;
    for (char ch : part) {
      if (ch == ',' || ch == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::InvalidBipartition, "bad character in cut '" + std::string(text) + "'");
      }
      qubits.push_back(ch - '0');
    }
    return qubits;
  };
  return Bipartition(parse_block(text.substr(0, bar)), parse_block(text.substr(bar + 1)));
}

std::vector<int> Bipartition::ordering() const {
  std::vector<int> order = block1_;
  order.insert(order.end(), block2_.begin(), block2_.end());
  return order;
}

std::string Bipartition::label() const {
  std::string s;
  for (int q : block1_) s += std::to_string(q);
  s += '|';
  for (int q : block2_) s += std::to_string(q);
  return s;
}

std::vector<ComplexMatrix> so_generators(std::size_t d) {
  std::vector<ComplexMatrix> gens;
  gens.reserve(d * (d - 1) / 2);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      ComplexMatrix e(d);
      e(a, b) = 1.0;
      e(b, a) = -1.0;
      gens.push_back(std::move(e));
    }
  }
  return gens;
}

std::vector<GeneratorPair> generator_pairs(std::size_t d1, std::size_t d2) {
  const auto left = so_generators(d1);
  const auto right = so_generators(d2);
  std::vector<GeneratorPair> pairs;
  pairs.reserve(left.size() * right.size());
  for (std::size_t m = 0; m < left.size(); ++m) {
    for (std::size_t n = 0; n < right.size(); ++n) {
      pairs.push_back({static_cast<int>(m) + 1, static_cast<int>(n) + 1, kron(left[m], right[n])});
    }
  }
  return pairs;
}

namespace {

// Column-major d x r factor with rho ~= A A^dagger.
struct EigenFactor {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::vector<Complex> cols;

  Complex at(std::size_t row, std::size_t col) const { return cols[col * dim + row]; }
};

EigenFactor eigen_factor(const DensityMatrix& rho, double rank_tol) {
  const auto& spec = rho.spectrum();
  EigenFactor f;
  f.dim = rho.dim();
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    if (spec.values[k] <= rank_tol) continue;
    const double w = std::sqrt(spec.values[k]);
    for (std::size_t i = 0; i < f.dim; ++i) f.cols.push_back(spec.vectors(i, k) * w);
    ++f.rank;
  }
  return f;
}

struct Entry {
  std::size_t row;
  std::size_t col;
  Complex value;
};

std::vector<Entry> nonzeros(const ComplexMatrix& s) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (s(i, j) != Complex{}) out.push_back({i, j, s(i, j)});
    }
  }
  return out;
}

// Singular values of T = A^dagger S A^*, descending, via the eigenvalues
// +-sigma of the Hermitian matrix [[0, T], [T^dagger, 0]].
std::vector<double> factor_lambdas(const EigenFactor& a, const std::vector<Entry>& s) {
  const std::size_t r = a.rank;
  ComplexMatrix t(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Complex acc = 0.0;
      for (const auto& e : s) acc += std::conj(a.at(e.row, i)) * e.value * std::conj(a.at(e.col, j));
      t(i, j) = acc;
    }
  }
  ComplexMatrix h(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      h(i, r + j) = t(i, j);
      h(r + j, i) = std::conj(t(i, j));
    }
  }
  const auto eig = hermitian_eig(h);
  std::vector<double> sigma(r);
  for (std::size_t k = 0; k < r; ++k) sigma[k] = std::max(0.0, eig.values[k]);
  return sigma;
}

PairTerm make_term(int m, int n, const std::vector<double>& sigma) {
  PairTerm term{m, n, {}, 0.0, 0.0};
  for (std::size_t k = 0; k < 4 && k < sigma.size(); ++k) term.lambda[k] = sigma[k];
  for (std::size_t k = 4; k < sigma.size(); ++k) {
    term.max_discarded = std::max(term.max_discarded, sigma[k] * sigma[k]);
  }
  const auto& l = term.lambda;
  term.c_mn = std::max(0.0, l[0] - l[1] - l[2] - l[3]);
  return term;
}

ComplexMatrix sigma_yy() { return kron(pauli::Y(), pauli::Y()); }

}  // namespace

std::vector<double> inversion_lambdas(const DensityMatrix& rho, const ComplexMatrix& s,
                                      double rank_tol) {
  if (s.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "inversion operator size");
  if (s.hermiticity_residual() > kHermitianTol) {
    throw Error(ErrorCode::NotHermitian, "inversion operator must be Hermitian");
  }
  return factor_lambdas(eigen_factor(rho, rank_tol), nonzeros(s));
}

std::vector<double> inversion_spectrum(const DensityMatrix& rho, const ComplexMatrix& s) {
  if (s.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "inversion operator size");
  const ComplexMatrix inverted = s * rho.matrix().conjugate() * s;
  const ComplexMatrix root = psd_sqrt(inverted);
  ComplexMatrix similar = root * rho.matrix() * root;
  // Exact Hermitian part; the product is Hermitian up to roundoff.
  similar = (similar + similar.adjoint()) * Complex(0.5, 0.0);
  return hermitian_eig(similar).values;
}

double wootters(const DensityMatrix& rho, const ConcurrenceOptions& options) {
  if (rho.n_qubits() != 2) {
    throw Error(ErrorCode::WrongDimension,
                fmt::format("Wootters concurrence needs 2 qubits, got {}", rho.n_qubits()));
  }
  const auto sigma = inversion_lambdas(rho, sigma_yy(), options.rank_tol);
  return make_term(1, 1, sigma).c_mn;
}

ConcurrenceBreakdown bipartite_concurrence(const DensityMatrix& rho, const Bipartition& cut,
                                           const ConcurrenceOptions& options) {
  if (cut.n_qubits() != rho.n_qubits()) {
    throw Error(ErrorCode::WrongDimension,
                fmt::format("cut {} does not fit a {}-qubit state", cut.label(), rho.n_qubits()));
  }
  const auto order = cut.ordering();
  const bool contiguous = std::is_sorted(order.begin(), order.end());
  const DensityMatrix arranged = contiguous ? rho : permute_qubits(rho, order);
  const auto factor = eigen_factor(arranged, options.rank_tol);

  ConcurrenceBreakdown out;
  double sum2 = 0.0;
  for (const auto& pair : generator_pairs(cut.d1(), cut.d2())) {
    auto term = make_term(pair.m, pair.n, factor_lambdas(factor, nonzeros(pair.s_mn)));
    if (term.max_discarded > options.leak_tol) {
      throw Error(ErrorCode::SpectralLeak,
                  fmt::format("cut {} pair ({}, {}): discarded eigenvalue {:.3g} exceeds {:.1g}",
                              cut.label(), pair.m, pair.n, term.max_discarded, options.leak_tol));
    }
    sum2 += term.c_mn * term.c_mn;
    out.per_pair.push_back(term);
  }
  out.total = std::sqrt(sum2);
  return out;
}

double tau3(const DensityMatrix& rho, const ConcurrenceOptions& options) {
  if (rho.n_qubits() != 3) {
    throw Error(ErrorCode::WrongDimension, fmt::format("tau3 needs 3 qubits, got {}", rho.n_qubits()));
  }
  double sum2 = 0.0;
  for (const auto& cut : {Bipartition({1, 2}, {3}), Bipartition({1, 3}, {2}), Bipartition({2, 3}, {1})}) {
    const double c = bipartite_concurrence(rho, cut, options).total;
    sum2 += c * c;
  }
  return std::sqrt(sum2 / 3.0);
}

double concurrence(const DensityMatrix& rho, const Bipartition& cut, const ConcurrenceOptions& options) {
  if (rho.n_qubits() == 2 && cut.n_qubits() == 2) return wootters(rho, options);
  return bipartite_concurrence(rho, cut, options).total;
}

}  // namespace conclab
