#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "conclab/density.hpp"
#include "conclab/matrix.hpp"

namespace conclab {

// Discarded eigenvalues of rho * rho~ above this raise SpectralLeak.
inline constexpr double kLeakTol = 1e-8;

// Ordered split of qubits 1..n into two nonempty blocks.
class Bipartition {
 public:
  Bipartition(std::vector<int> block1, std::vector<int> block2);

  // "12|3", "1,2|3,4"; digits without separators are single qubits.
  static Bipartition parse(std::string_view text);

  const std::vector<int>& block1() const noexcept { return block1_; }
  const std::vector<int>& block2() const noexcept { return block2_; }
  int n_qubits() const noexcept { return static_cast<int>(block1_.size() + block2_.size()); }
  std::size_t d1() const noexcept { return std::size_t{1} << block1_.size(); }
  std::size_t d2() const noexcept { return std::size_t{1} << block2_.size(); }

  // block1 followed by block2; feeding it to permute_qubits makes the cut contiguous.
  std::vector<int> ordering() const;
  std::string label() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<int> block1_;
  std::vector<int> block2_;
};

// Basis generators E_ab (a < b, lexicographic) of so(d): +1 at (a, b), -1 at (b, a).
std::vector<ComplexMatrix> so_generators(std::size_t d);

struct GeneratorPair {
  int m = 0;  // 1-based index into so_generators(d1)
  int n = 0;  // 1-based index into so_generators(d2)
  ComplexMatrix s_mn;  // L_m (x) L_n
};

std::vector<GeneratorPair> generator_pairs(std::size_t d1, std::size_t d2);

struct PairTerm {
  int m = 0;
  int n = 0;
  std::array<double, 4> lambda{};  // descending
  double c_mn = 0.0;
  // Largest eigenvalue of rho * rho~_mn beyond the top four.
  double max_discarded = 0.0;
};

struct ConcurrenceBreakdown {
  std::vector<PairTerm> per_pair;  // (m, n) lexicographic
  double total = 0.0;
};

struct ConcurrenceOptions {
  double rank_tol = kRankTol;
  double leak_tol = kLeakTol;
};

// Square roots of the nonzero eigenvalues of rho * (S rho^* S), descending.
// S must be Hermitian. rho is replaced by its eigen-factor truncated at
// rank_tol, and the values are computed as singular values of
// A^dagger S A^* (rho = A A^dagger) through a Hermitian embedding, which
// keeps absolute accuracy near machine precision even for zero values.
std::vector<double> inversion_lambdas(const DensityMatrix& rho, const ComplexMatrix& s,
                                      double rank_tol = kRankTol);

// All dim eigenvalues of rho * (S rho^* S), descending, computed as the
// spectrum of the similar Hermitian matrix sqrt(rho~) rho sqrt(rho~).
std::vector<double> inversion_spectrum(const DensityMatrix& rho, const ComplexMatrix& s);

// Two-qubit Wootters concurrence.
double wootters(const DensityMatrix& rho, const ConcurrenceOptions& options = {});

// Generalized concurrence over all so(d1) x so(d2) state inversions.
ConcurrenceBreakdown bipartite_concurrence(const DensityMatrix& rho, const Bipartition& cut,
                                           const ConcurrenceOptions& options = {});

// Root-mean-square of the three 2|1 bipartite concurrences of a 3-qubit state.
double tau3(const DensityMatrix& rho, const ConcurrenceOptions& options = {});

// Wootters for two qubits, bipartite_concurrence total otherwise.
double concurrence(const DensityMatrix& rho, const Bipartition& cut,
                   const ConcurrenceOptions& options = {});

}  // namespace conclab
