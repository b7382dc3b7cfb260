#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conclab/factorization.hpp"

namespace conclab {

using Json = nlohmann::ordered_json;

// Name of the environment variable holding the default campaign seed.
inline constexpr const char* kSeedEnv = "CONCLAB_SEED";

// "BF" (sampled), "BF:p=0.2", "general:a=0.5/0.5/0.5/0.5", "I" (identity).
ChannelSpec parse_channel_spec(std::string_view text);
// Comma-separated list of channel specs, one per qubit.
std::vector<ChannelSpec> parse_channel_list(std::string_view text);

// {"family": "BF", "p": 0.2}, {"family": "general", "a": [..4..]},
// {"family": "PF"} (sampled) or a bare string as accepted by parse_channel_spec.
ChannelSpec channel_spec_from_json(const Json& j);
Json to_json(const ChannelSpec& spec);

// Realizes a spec list whose entries are all fixed.
std::vector<KrausChannel> fixed_channels(const std::vector<ChannelSpec>& specs);

// A state name string, or {"amplitudes": [[re, im], ...]} / {"amplitudes": [re, ...]}.
PureState state_from_json(const Json& j);

CampaignConfig campaign_from_json(const Json& j);
Json to_json(const CampaignConfig& config);

Json load_json_file(const std::string& path);

// Parses CONCLAB_SEED when set; throws InvalidConfig if it is not an integer.
std::optional<std::uint64_t> seed_from_env();

}  // namespace conclab
