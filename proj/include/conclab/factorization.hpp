#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conclab/channels.hpp"
#include "conclab/entanglement.hpp"
#include "conclab/states.hpp"

namespace conclab {

enum class IdentityId {
  TwoQProduct,    // C(A(x)B psi) = C(A) C(B)
  ThreeQProduct,  // C^{12|3} = C(A) C(B) C(C)
  ThreeQSum,      // C^{12|3} = C(A) C(C) + C(B) C(C)
  FourQProduct,   // C^{123|4} or C^{12|34} = C(A) C(B) C(C) C(D)
  FourQSum123_4,  // C^{123|4} = C(A) C(D) + C(B) C(D) + C(C) C(D)
  FourQSum12_34,  // C^{12|34} = C(A) C(C) + C(A) C(D) + C(B) C(C) + C(B) C(D)
};

std::string_view to_string(IdentityId id);

// Which qubit each single-sided factor channel acts on.
enum class AnchorMode {
  LastQubit,  // every factor state is [1 (x) ... (x) X] |psi><psi|
  OwnQubit,   // factor X acts on the qubit X acts on in the many-sided map
};

std::string_view to_string(AnchorMode mode);
AnchorMode parse_anchor(std::string_view text);

struct FactorizationIdentity {
  IdentityId id;
  std::string name;  // eq7, eq9, eq11, eq13, eq14, eq15, eq16
  Bipartition cut;
  // Each term multiplies the listed factors; factor k is the single-sided
  // state of channel k (0 = A, 1 = B, ...).
  std::vector<std::vector<int>> rhs_terms;
  // Default power of C(psi) multiplying the LHS: factors per term minus one.
  int normalization_exponent = 0;
  // Largest final-state rank for which the identity is claimed.
  int rank_ceiling = 0;

  int n_qubits() const noexcept { return cut.n_qubits(); }
  bool is_sum() const noexcept { return rhs_terms.size() > 1; }
};

// Accepts eq7, eq9, eq11, eq13, eq14, eq15, eq16.
FactorizationIdentity identity_by_name(std::string_view name);
FactorizationIdentity make_identity(IdentityId id);
std::vector<std::string> identity_names();

struct EvaluationOptions {
  AnchorMode anchor = AnchorMode::LastQubit;
  std::optional<int> normalization_exponent;
  // Move a single odd-family channel onto the last qubit for sum identities.
  bool relabel = true;
  ConcurrenceOptions concurrence;
};

struct FactorSide {
  std::vector<double> factors;  // C(X) per channel
  std::vector<int> ranks;       // rank of each single-sided state
  double rhs = 0.0;
  double residual = 0.0;
};

struct IdentityReport {
  std::string identity;
  std::string cut;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double initial_concurrence = 0.0;  // C(psi) on the cut
  int normalization_exponent = 0;
  int final_rank = 0;
  bool applicable = false;
  AnchorMode anchor = AnchorMode::LastQubit;
  FactorSide primary;    // evaluated with `anchor`
  FactorSide alternate;  // the other anchor convention
  std::vector<int> relabeling;  // qubit order applied before evaluation
  std::vector<std::string> channels;
  std::uint64_t seed = 0;
};

IdentityReport evaluate_identity(const FactorizationIdentity& identity, const PureState& psi,
                                 const std::vector<KrausChannel>& channels,
                                 const EvaluationOptions& options = {});

struct ScenarioClass {
  int final_rank = 0;
  std::optional<IdentityId> suggested;
};

ScenarioClass classify_scenario(const PureState& psi, const std::vector<KrausChannel>& channels,
                                double rank_tol = kRankTol);

// --- randomized campaigns ---------------------------------------------------

// One channel slot of a campaign: either a fixed channel or a family sampled
// afresh for every draw.
struct ChannelSpec {
  ChannelFamily family = ChannelFamily::GeneralPauli;
  std::optional<PauliParams> fixed;

  static ChannelSpec sampled(ChannelFamily family) { return {family, std::nullopt}; }
  static ChannelSpec with_p(ChannelFamily family, double p);
  static ChannelSpec identity();

  KrausChannel realize(std::mt19937_64& rng) const;
  std::string label() const;
};

struct CampaignConfig {
  std::string state = "bell";  // a named state, or "random" for a fresh draw per sample
  std::optional<std::vector<Complex>> amplitudes;  // overrides `state`
  std::vector<ChannelSpec> channels;
  std::size_t samples = 1000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::optional<std::string> identity;  // nullopt: pick by rank
  std::optional<int> normalization_exponent;
  AnchorMode anchor = AnchorMode::LastQubit;
};

struct SampleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  int rank = 0;
  std::optional<IdentityReport> report;  // empty when no identity applies
  bool pass = false;
};

struct RankBucket {
  std::size_t samples = 0;
  std::size_t evaluated = 0;
  std::size_t passed = 0;
  double max_residual = 0.0;
  std::vector<std::uint64_t> failure_seeds;  // at most kMaxFailureExamples, smallest first
};

inline constexpr std::size_t kMaxFailureExamples = 10;

struct CampaignReport {
  std::map<int, RankBucket> buckets;
  std::vector<SampleRecord> samples;
};

// Seed of sample `index` in a campaign seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Draws the channels (and state, if random) of one sample.
struct SampleDraw {
  PureState psi;
  std::vector<KrausChannel> channels;
};
SampleDraw draw_sample(const CampaignConfig& config, std::uint64_t sample_seed);

void validate(const CampaignConfig& config);

CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace conclab
