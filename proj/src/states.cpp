#include "conclab/states.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace conclab {

PureState::PureState(std::vector<Complex> amplitudes, std::string name)
    : amplitudes_(std::move(amplitudes)), name_(std::move(name)) {
  n_qubits_ = qubit_count(amplitudes_.size());
  double norm2 = 0.0;
  for (const auto& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NotFinite, "amplitude is not finite");
    }
    norm2 += std::norm(z);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized, "state norm " + std::to_string(std::sqrt(norm2)));
  }
}

PureState PureState::permuted(std::span<const int> perm) const {
  return PureState(permute_qubits(amplitudes_, perm), name_);
}

PureState bell(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "bell alpha must lie in [0, 1]");
  }
  std::vector<Complex> amps(4);
  amps[0] = alpha;
  amps[3] = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  return PureState(std::move(amps), "bell");
}

PureState ghz(int n) {
  if (n != 3 && n != 4) throw Error(ErrorCode::UnsupportedN, "ghz supports n = 3 or 4");
  std::vector<Complex> amps(std::size_t{1} << n);
  amps.front() = 1.0 / std::numbers::sqrt2;
  amps.back() = 1.0 / std::numbers::sqrt2;
  return PureState(std::move(amps), "ghz" + std::to_string(n));
}

PureState w(int n) {
  if (n != 3 && n != 4) throw Error(ErrorCode::UnsupportedN, "w supports n = 3 or 4");
  std::vector<Complex> amps(std::size_t{1} << n);
  const double weight = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) amps[std::size_t{1} << k] = weight;
  return PureState(std::move(amps), "w" + std::to_string(n));
}

PureState random_pure(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::UnsupportedN, "random_pure needs n >= 1");
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm2 = 0.0;
  for (auto& z : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : amps) z *= inv;
  return PureState(std::move(amps), "random");
}

PureState state_by_name(std::string_view name) {
  if (name == "bell") return bell();
  if (name == "ghz3") return ghz(3);
  if (name == "ghz4") return ghz(4);
  if (name == "w3") return w(3);
  if (name == "w4") return w(4);
  constexpr std::string_view prefix = "bell:alpha=";
  if (name.starts_with(prefix)) {
    const auto text = name.substr(prefix.size());
    double alpha = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), alpha);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorCode::InvalidConfig, "cannot parse alpha in '" + std::string(name) + "'");
    }
    auto s = bell(alpha);
    return PureState(std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()),
                     std::string(name));
  }
  throw Error(ErrorCode::InvalidConfig, "unknown state '" + std::string(name) + "'");
}

}  // namespace conclab
