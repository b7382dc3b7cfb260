#include "conclab/channels.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace conclab {

std::string_view to_string(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::BF: return "BF";
    case ChannelFamily::PF: return "PF";
    case ChannelFamily::BPF: return "BPF";
    case ChannelFamily::GeneralPauli: return "general";
    case ChannelFamily::Custom: return "custom";
  }
  return "unknown";
}

ChannelFamily parse_family(std::string_view text) {
  if (text == "BF") return ChannelFamily::BF;
  if (text == "PF") return ChannelFamily::PF;
  if (text == "BPF") return ChannelFamily::BPF;
  if (text == "general" || text == "GeneralPauli") return ChannelFamily::GeneralPauli;
  throw Error(ErrorCode::InvalidConfig, "unknown channel family '" + std::string(text) + "'");
}

int flip_coordinate(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::BF: return 1;
    case ChannelFamily::BPF: return 2;
    case ChannelFamily::PF: return 3;
    default: break;
  }
  throw Error(ErrorCode::InvalidConfig,
              "family '" + std::string(to_string(family)) + "' has no single flip coordinate");
}

void PauliParams::validate(ChannelFamily family) const {
  double norm2 = 0.0;
  for (double v : a) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NotFinite, "Pauli parameter is not finite");
    norm2 += v * v;
  }
  if (std::abs(norm2 - 1.0) > kParamNormTol) {
    throw Error(ErrorCode::NotNormalized, fmt::format("sum a_i^2 = {:.17g}", norm2));
  }
  if (family == ChannelFamily::BF || family == ChannelFamily::PF || family == ChannelFamily::BPF) {
    const int flip = flip_coordinate(family);
    for (int i = 1; i < 4; ++i) {
      if (i != flip && a[i] != 0.0) {
        throw Error(ErrorCode::FamilyMismatch,
                    fmt::format("{} channel requires a{} = 0", to_string(family), i + 1));
      }
    }
  }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, ChannelFamily family,
                           std::optional<PauliParams> params)
    : ops_(std::move(ops)), family_(family), params_(params) {
  if (ops_.empty()) throw Error(ErrorCode::IncompleteChannel, "no Kraus operators");
  for (const auto& k : ops_) {
    if (k.dim() != ops_.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators differ in dimension");
    }
  }
  const double residual = completeness_residual();
  if (residual > kCompletenessTol) {
    throw Error(ErrorCode::IncompleteChannel,
                fmt::format("sum K^dagger K deviates from I by {:.3g}", residual));
  }
}

double KrausChannel::completeness_residual() const {
  ComplexMatrix sum(dim());
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

std::string KrausChannel::describe() const {
  if (!params_) return fmt::format("{}[{} ops]", to_string(family_), ops_.size());
  const auto& a = params_->a;
  return fmt::format("{}({:.6g},{:.6g},{:.6g},{:.6g})", to_string(family_), a[0], a[1], a[2], a[3]);
}

KrausChannel pauli_channel(const PauliParams& params, ChannelFamily family) {
  params.validate(family);
  const std::array<ComplexMatrix, 4> sigma{pauli::I(), pauli::X(), pauli::Y(), pauli::Z()};
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < 4; ++i) {
    if (params.a[i] != 0.0) ops.push_back(sigma[i] * Complex(params.a[i], 0.0));
  }
  return KrausChannel(std::move(ops), family, params);
}

KrausChannel family_channel(ChannelFamily family, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "flip probability outside [0, 1]");
  PauliParams params;
  params.a = {std::sqrt(1.0 - p), 0.0, 0.0, 0.0};
  params.a[flip_coordinate(family)] = std::sqrt(p);
  return pauli_channel(params, family);
}

KrausChannel identity_channel() { return pauli_channel(PauliParams{}, ChannelFamily::GeneralPauli); }

KrausChannel sample_channel(ChannelFamily family, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  PauliParams params;
  params.a = {0.0, 0.0, 0.0, 0.0};
  if (family == ChannelFamily::GeneralPauli) {
    for (auto& v : params.a) v = gauss(rng);
  } else if (family == ChannelFamily::Custom) {
    throw Error(ErrorCode::InvalidConfig, "cannot sample a custom channel");
  } else {
    params.a[0] = gauss(rng);
    params.a[flip_coordinate(family)] = gauss(rng);
  }
  double norm2 = 0.0;
  for (double v : params.a) norm2 += v * v;
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : params.a) v *= inv;
  return pauli_channel(params, family);
}

ChannelAssignment::ChannelAssignment(int n_qubits,
                                     std::vector<std::pair<int, KrausChannel>> per_qubit)
    : n_qubits_(n_qubits), per_qubit_(std::move(per_qubit)) {
  if (n_qubits_ < 1) throw Error(ErrorCode::InvalidAssignment, "need at least one qubit");
  std::vector<bool> seen(n_qubits_ + 1, false);
  for (const auto& [qubit, channel] : per_qubit_) {
    if (qubit < 1 || qubit > n_qubits_) {
      throw Error(ErrorCode::InvalidAssignment, fmt::format("qubit {} outside 1..{}", qubit, n_qubits_));
    }
    if (seen[qubit]) throw Error(ErrorCode::InvalidAssignment, fmt::format("qubit {} assigned twice", qubit));
    seen[qubit] = true;
    if (channel.dim() != 2) {
      throw Error(ErrorCode::DimensionMismatch, "only single-qubit channels can be assigned");
    }
  }
}

ChannelAssignment ChannelAssignment::many_sided(const std::vector<KrausChannel>& channels) {
  std::vector<std::pair<int, KrausChannel>> entries;
  for (std::size_t k = 0; k < channels.size(); ++k) {
    entries.emplace_back(static_cast<int>(k) + 1, channels[k]);
  }
  return ChannelAssignment(static_cast<int>(channels.size()), std::move(entries));
}

ChannelAssignment ChannelAssignment::single(int n_qubits, int qubit, KrausChannel channel) {
  return ChannelAssignment(n_qubits, {{qubit, std::move(channel)}});
}

std::vector<ComplexMatrix> ChannelAssignment::product_operators() const {
  std::vector<std::vector<ComplexMatrix>> local(n_qubits_, {pauli::I()});
  for (const auto& [qubit, channel] : per_qubit_) local[qubit - 1] = channel.ops();

  std::vector<ComplexMatrix> products;
  std::vector<std::size_t> choice(n_qubits_, 0);
  while (true) {
    ComplexMatrix k = local[0][choice[0]];
    for (int q = 1; q < n_qubits_; ++q) k = kron(k, local[q][choice[q]]);
    products.push_back(std::move(k));

    // Mixed-radix increment, last qubit fastest.
    int q = n_qubits_ - 1;
    while (q >= 0 && ++choice[q] == local[q].size()) {
      choice[q] = 0;
      --q;
    }
    if (q < 0) break;
  }
  return products;
}

namespace {

void check_arity(const ChannelAssignment& assignment, int n_qubits) {
  if (assignment.n_qubits() != n_qubits) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("assignment is for {} qubits, state has {}", assignment.n_qubits(), n_qubits));
  }
}

}  // namespace

DensityMatrix apply(const ChannelAssignment& assignment, const DensityMatrix& rho) {
  check_arity(assignment, rho.n_qubits());
  ComplexMatrix out(rho.dim());
  for (const auto& k : assignment.product_operators()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix apply(const ChannelAssignment& assignment, const PureState& psi) {
  check_arity(assignment, psi.n_qubits());
  const std::size_t dim = psi.amplitudes().size();
  ComplexMatrix out(dim);
  for (const auto& k : assignment.product_operators()) {
    const auto v = multiply(k, psi.amplitudes());
    for (std::size_t i = 0; i < dim; ++i) {
      if (v[i] == Complex{}) continue;
      for (std::size_t j = 0; j < dim; ++j) out(i, j) += v[i] * std::conj(v[j]);
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix single_sided(const KrausChannel& channel, int target_qubit, const PureState& psi) {
  return apply(ChannelAssignment::single(psi.n_qubits(), target_qubit, channel), psi);
}

}  // namespace conclab
