#pragma once

#include <numbers>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conclab/density.hpp"
#include "conclab/matrix.hpp"

namespace conclab {

inline constexpr double kNormTol = 1e-12;

// Unit-norm pure state on n qubits. Basis index k is the bitstring of k read
// left to right as qubits 1..n (|011> is index 3 for n = 3).
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes, std::string name = "custom");

  int n_qubits() const noexcept { return n_qubits_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const std::string& name() const noexcept { return name_; }

  DensityMatrix density() const { return DensityMatrix::from_pure(amplitudes_); }
  PureState permuted(std::span<const int> perm) const;

 private:
  std::vector<Complex> amplitudes_;
  int n_qubits_ = 0;
  std::string name_;
};

// alpha|00> + sqrt(1 - alpha^2)|11>, 0 <= alpha <= 1.
PureState bell(double alpha = 1.0 / std::numbers::sqrt2);
PureState ghz(int n);
PureState w(int n);

// Normalized complex Gaussian vector.
PureState random_pure(int n, std::mt19937_64& rng);

// Accepts "bell", "bell:alpha=0.6", "ghz3", "w3", "ghz4", "w4".
PureState state_by_name(std::string_view name);

}  // namespace conclab
