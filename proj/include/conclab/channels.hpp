#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conclab/density.hpp"
#include "conclab/matrix.hpp"
#include "conclab/states.hpp"

namespace conclab {

enum class ChannelFamily { BF, PF, BPF, GeneralPauli, Custom };

std::string_view to_string(ChannelFamily family);
// Accepts BF, PF, BPF, general (also GeneralPauli); case-sensitive.
ChannelFamily parse_family(std::string_view text);

inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kParamNormTol = 1e-12;

// Weights of (I, sigma_x, sigma_y, sigma_z); the squares sum to one.
struct PauliParams {
  std::array<double, 4> a{1.0, 0.0, 0.0, 0.0};

  // Throws NotNormalized, or FamilyMismatch when `family` forbids a nonzero
  // coordinate (BF keeps a1,a2; PF keeps a1,a4; BPF keeps a1,a3).
  void validate(ChannelFamily family = ChannelFamily::GeneralPauli) const;

  friend bool operator==(const PauliParams&, const PauliParams&) = default;
};

// Index into PauliParams::a of the flip coordinate of a BF/PF/BPF family.
int flip_coordinate(ChannelFamily family);

class KrausChannel {
 public:
  // Throws IncompleteChannel if sum K^dagger K deviates from I by more than
  // kCompletenessTol entrywise.
  KrausChannel(std::vector<ComplexMatrix> ops, ChannelFamily family = ChannelFamily::Custom,
               std::optional<PauliParams> params = std::nullopt);

  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }
  ChannelFamily family() const noexcept { return family_; }
  const std::optional<PauliParams>& params() const noexcept { return params_; }
  std::size_t dim() const noexcept { return ops_.front().dim(); }

  // max |sum K^dagger K - I| entrywise.
  double completeness_residual() const;

  std::string describe() const;

 private:
  std::vector<ComplexMatrix> ops_;
  ChannelFamily family_;
  std::optional<PauliParams> params_;
};

// K_i = a_i sigma_i for every nonzero a_i.
KrausChannel pauli_channel(const PauliParams& params,
                           ChannelFamily family = ChannelFamily::GeneralPauli);

// a = (sqrt(1 - p), sqrt(p)) on the identity and flip coordinates.
KrausChannel family_channel(ChannelFamily family, double p);

KrausChannel identity_channel();

// Uniform on the unit sphere of the family's free coordinates.
KrausChannel sample_channel(ChannelFamily family, std::mt19937_64& rng);

// Local channels for an n-qubit register. Qubits without an entry get the
// identity channel.
class ChannelAssignment {
 public:
  ChannelAssignment(int n_qubits, std::vector<std::pair<int, KrausChannel>> per_qubit);

  // Channel k acts on qubit k + 1.
  static ChannelAssignment many_sided(const std::vector<KrausChannel>& channels);
  static ChannelAssignment single(int n_qubits, int qubit, KrausChannel channel);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<std::pair<int, KrausChannel>>& per_qubit() const noexcept { return per_qubit_; }

  // Every product operator (x)_q K^(q), identity on unassigned qubits.
  std::vector<ComplexMatrix> product_operators() const;

 private:
  int n_qubits_;
  std::vector<std::pair<int, KrausChannel>> per_qubit_;
};

DensityMatrix apply(const ChannelAssignment& assignment, const DensityMatrix& rho);
DensityMatrix apply(const ChannelAssignment& assignment, const PureState& psi);

// [1 (x) ... (x) A (x) ... (x) 1] |psi><psi| with A on `target_qubit` (1-based).
DensityMatrix single_sided(const KrausChannel& channel, int target_qubit, const PureState& psi);

}  // namespace conclab
