#include "conclab/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace conclab {

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::TwoQProduct: return "TWO_Q_PRODUCT";
    case IdentityId::ThreeQProduct: return "THREE_Q_PRODUCT";
    case IdentityId::ThreeQSum: return "THREE_Q_SUM";
    case IdentityId::FourQProduct: return "FOUR_Q_PRODUCT";
    case IdentityId::FourQSum123_4: return "FOUR_Q_SUM_123_4";
    case IdentityId::FourQSum12_34: return "FOUR_Q_SUM_12_34";
  }
  return "UNKNOWN";
}

std::string_view to_string(AnchorMode mode) {
  return mode == AnchorMode::LastQubit ? "last" : "own";
}

AnchorMode parse_anchor(std::string_view text) {
  if (text == "last") return AnchorMode::LastQubit;
  if (text == "own") return AnchorMode::OwnQubit;
  throw Error(ErrorCode::InvalidConfig, "anchor must be 'last' or 'own', got '" + std::string(text) + "'");
}

namespace {

FactorizationIdentity build(IdentityId id, std::string name, Bipartition cut,
                            std::vector<std::vector<int>> terms, int rank_ceiling) {
  const int exponent = static_cast<int>(terms.front().size()) - 1;
  return FactorizationIdentity{id, std::move(name), std::move(cut), std::move(terms), exponent,
                               rank_ceiling};
}

}  // namespace

FactorizationIdentity identity_by_name(std::string_view name) {
  if (name == "eq7") return build(IdentityId::TwoQProduct, "eq7", Bipartition({1}, {2}), {{0, 1}}, 2);
  if (name == "eq9") {
    return build(IdentityId::ThreeQProduct, "eq9", Bipartition({1, 2}, {3}), {{0, 1, 2}}, 2);
  }
  if (name == "eq11") {
    return build(IdentityId::ThreeQSum, "eq11", Bipartition({1, 2}, {3}), {{0, 2}, {1, 2}}, 4);
  }
  if (name == "eq13") {
    return build(IdentityId::FourQProduct, "eq13", Bipartition({1, 2, 3}, {4}), {{0, 1, 2, 3}}, 2);
  }
  if (name == "eq14") {
    return build(IdentityId::FourQProduct, "eq14", Bipartition({1, 2}, {3, 4}), {{0, 1, 2, 3}}, 2);
  }
  if (name == "eq15") {
    return build(IdentityId::FourQSum123_4, "eq15", Bipartition({1, 2, 3}, {4}),
                 {{0, 3}, {1, 3}, {2, 3}}, 4);
  }
  if (name == "eq16") {
    return build(IdentityId::FourQSum12_34, "eq16", Bipartition({1, 2}, {3, 4}),
                 {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, 4);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown identity '" + std::string(name) + "'");
}

FactorizationIdentity make_identity(IdentityId id) {
  switch (id) {
    case IdentityId::TwoQProduct: return identity_by_name("eq7");
    case IdentityId::ThreeQProduct: return identity_by_name("eq9");
    case IdentityId::ThreeQSum: return identity_by_name("eq11");
    case IdentityId::FourQProduct: return identity_by_name("eq13");
    case IdentityId::FourQSum123_4: return identity_by_name("eq15");
    case IdentityId::FourQSum12_34: return identity_by_name("eq16");
  }
  throw Error(ErrorCode::InvalidConfig, "unknown identity id");
}

std::vector<std::string> identity_names() {
  return {"eq7", "eq9", "eq11", "eq13", "eq14", "eq15", "eq16"};
}

namespace {

// Swaps a lone odd-family channel onto the last qubit; identity otherwise.
std::vector<int> odd_channel_relabeling(const std::vector<KrausChannel>& channels) {
  const int n = static_cast<int>(channels.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  if (n < 3) return perm;
  for (int odd = 0; odd < n; ++odd) {
    const ChannelFamily rest = channels[odd == 0 ? 1 : 0].family();
    bool lone = channels[odd].family() != rest;
    for (int k = 0; k < n && lone; ++k) {
      if (k != odd && channels[k].family() != rest) lone = false;
    }
    if (lone) {
      std::swap(perm[odd], perm[n - 1]);
      break;
    }
  }
  return perm;
}

FactorSide evaluate_factors(const FactorizationIdentity& identity, const PureState& psi,
                            const std::vector<KrausChannel>& channels, AnchorMode anchor,
                            double scaled_lhs, const ConcurrenceOptions& options) {
  const int n = psi.n_qubits();
  FactorSide side;
  for (int q = 0; q < n; ++q) {
    const int target = anchor == AnchorMode::LastQubit ? n : q + 1;
    const auto state = single_sided(channels[q], target, psi);
    side.factors.push_back(concurrence(state, identity.cut, options));
    side.ranks.push_back(state.rank(options.rank_tol));
  }
  for (const auto& term : identity.rhs_terms) {
    double product = 1.0;
    for (int k : term) product *= side.factors[k];
    side.rhs += product;
  }
  side.residual = std::abs(scaled_lhs - side.rhs);
  return side;
}

}  // namespace

IdentityReport evaluate_identity(const FactorizationIdentity& identity, const PureState& psi_in,
                                 const std::vector<KrausChannel>& channels_in,
                                 const EvaluationOptions& options) {
  const int n = psi_in.n_qubits();
  if (static_cast<int>(channels_in.size()) != n) {
    throw Error(ErrorCode::ArityMismatch,
                fmt::format("{} channels for a {}-qubit state", channels_in.size(), n));
  }
  if (identity.n_qubits() != n) {
    throw Error(ErrorCode::ArityMismatch,
                fmt::format("{} is a {}-qubit identity, state has {} qubits", identity.name,
                            identity.n_qubits(), n));
  }

  IdentityReport report;
  report.identity = identity.name;
  report.cut = identity.cut.label();
  report.anchor = options.anchor;
  report.relabeling.resize(n);
  std::iota(report.relabeling.begin(), report.relabeling.end(), 1);
  if (options.relabel && identity.is_sum()) report.relabeling = odd_channel_relabeling(channels_in);

  const PureState psi = psi_in.permuted(report.relabeling);
  std::vector<KrausChannel> channels;
  for (int k = 0; k < n; ++k) channels.push_back(channels_in[report.relabeling[k] - 1]);
  for (const auto& ch : channels) report.channels.push_back(ch.describe());

  const auto& copts = options.concurrence;
  const auto final_state = apply(ChannelAssignment::many_sided(channels), psi);
  report.final_rank = final_state.rank(copts.rank_tol);
  report.applicable = report.final_rank <= identity.rank_ceiling;
  report.lhs = concurrence(final_state, identity.cut, copts);
  report.initial_concurrence = concurrence(psi.density(), identity.cut, copts);
  report.normalization_exponent = options.normalization_exponent.value_or(identity.normalization_exponent);

  const double scaled_lhs = report.lhs * std::pow(report.initial_concurrence, report.normalization_exponent);
  const AnchorMode other =
      options.anchor == AnchorMode::LastQubit ? AnchorMode::OwnQubit : AnchorMode::LastQubit;
  report.primary = evaluate_factors(identity, psi, channels, options.anchor, scaled_lhs, copts);
  report.alternate = evaluate_factors(identity, psi, channels, other, scaled_lhs, copts);
  report.rhs = report.primary.rhs;
  report.residual = report.primary.residual;
  return report;
}

ScenarioClass classify_scenario(const PureState& psi, const std::vector<KrausChannel>& channels,
                                double rank_tol) {
  if (static_cast<int>(channels.size()) != psi.n_qubits()) {
    throw Error(ErrorCode::ArityMismatch,
                fmt::format("{} channels for a {}-qubit state", channels.size(), psi.n_qubits()));
  }
  ScenarioClass out;
  out.final_rank = apply(ChannelAssignment::many_sided(channels), psi).rank(rank_tol);
  const int n = psi.n_qubits();
  if (out.final_rank <= 2) {
    if (n == 2) out.suggested = IdentityId::TwoQProduct;
    if (n == 3) out.suggested = IdentityId::ThreeQProduct;
    if (n == 4) out.suggested = IdentityId::FourQProduct;
  } else if (out.final_rank <= 4) {
    if (n == 3) out.suggested = IdentityId::ThreeQSum;
    if (n == 4) out.suggested = IdentityId::FourQSum123_4;
  }
  return out;
}

// --- campaigns ----------------------------------------------------------------

ChannelSpec ChannelSpec::with_p(ChannelFamily family, double p) {
  const auto ch = family_channel(family, p);
  return {family, ch.params()};
}

ChannelSpec ChannelSpec::identity() { return {ChannelFamily::GeneralPauli, PauliParams{}}; }

KrausChannel ChannelSpec::realize(std::mt19937_64& rng) const {
  if (fixed) return pauli_channel(*fixed, family);
  return sample_channel(family, rng);
}

std::string ChannelSpec::label() const {
  if (!fixed) return std::string(to_string(family));
  return pauli_channel(*fixed, family).describe();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

namespace {

PureState campaign_state(const CampaignConfig& config, std::mt19937_64& rng) {
  if (config.amplitudes) return PureState(*config.amplitudes);
  if (config.state == "random") return random_pure(static_cast<int>(config.channels.size()), rng);
  return state_by_name(config.state);
}

}  // namespace

SampleDraw draw_sample(const CampaignConfig& config, std::uint64_t sample_seed) {
  std::mt19937_64 rng(sample_seed);
  PureState psi = campaign_state(config, rng);
  std::vector<KrausChannel> channels;
  for (const auto& spec : config.channels) channels.push_back(spec.realize(rng));
  return {std::move(psi), std::move(channels)};
}

void validate(const CampaignConfig& config) {
  if (config.channels.empty()) throw Error(ErrorCode::InvalidConfig, "campaign needs channels");
  if (config.samples == 0) throw Error(ErrorCode::InvalidConfig, "samples must be positive");
  if (!(config.tol >= 0.0)) throw Error(ErrorCode::InvalidConfig, "tol must be nonnegative");
  std::mt19937_64 probe(config.seed);
  const auto psi = campaign_state(config, probe);
  if (psi.n_qubits() != static_cast<int>(config.channels.size())) {
    throw Error(ErrorCode::ArityMismatch,
                fmt::format("{} channels for a {}-qubit state", config.channels.size(), psi.n_qubits()));
  }
  if (config.identity) {
    const auto identity = identity_by_name(*config.identity);
    if (identity.n_qubits() != psi.n_qubits()) {
      throw Error(ErrorCode::ArityMismatch, fmt::format("{} does not fit {} qubits", identity.name,
                                                        psi.n_qubits()));
    }
  }
  for (const auto& spec : config.channels) {
    if (spec.fixed) spec.fixed->validate(spec.family);
    if (!spec.fixed && spec.family == ChannelFamily::Custom) {
      throw Error(ErrorCode::InvalidConfig, "custom channels cannot be sampled");
    }
  }
}

CampaignReport run_campaign(const CampaignConfig& config) {
  validate(config);
  EvaluationOptions options;
  options.anchor = config.anchor;
  options.normalization_exponent = config.normalization_exponent;

  const std::optional<FactorizationIdentity> fixed_identity =
      config.identity ? std::optional(identity_by_name(*config.identity)) : std::nullopt;

  CampaignReport report;
  for (std::size_t i = 0; i < config.samples; ++i) {
    SampleRecord record;
    record.index = i;
    record.seed = derive_seed(config.seed, i);
    const auto draw = draw_sample(config, record.seed);

    const auto scenario = classify_scenario(draw.psi, draw.channels);
    record.rank = scenario.final_rank;
    std::optional<FactorizationIdentity> identity = fixed_identity;
    if (!identity && scenario.suggested) identity = make_identity(*scenario.suggested);

    auto& bucket = report.buckets[record.rank];
    ++bucket.samples;
    if (identity) {
      record.report = evaluate_identity(*identity, draw.psi, draw.channels, options);
      record.report->seed = record.seed;
      record.pass = record.report->residual <= config.tol;
      ++bucket.evaluated;
      bucket.max_residual = std::max(bucket.max_residual, record.report->residual);
      if (record.pass) {
        ++bucket.passed;
      } else {
        auto& seeds = bucket.failure_seeds;
        seeds.insert(std::upper_bound(seeds.begin(), seeds.end(), record.seed), record.seed);
        if (seeds.size() > kMaxFailureExamples) seeds.pop_back();
      }
    }
    report.samples.push_back(std::move(record));
  }
  return report;
}

}  // namespace conclab
