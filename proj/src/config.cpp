#include "conclab/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace conclab {

namespace {

double parse_double(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidConfig,
                "cannot parse number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

ChannelSpec spec_from_params(ChannelFamily family, const std::array<double, 4>& a) {
  PauliParams params{a};
  params.validate(family);
  return {family, params};
}

}  // namespace

ChannelSpec parse_channel_spec(std::string_view text) {
  if (text == "I" || text == "id") return ChannelSpec::identity();
  const auto colon = text.find(':');
  const auto family = parse_family(text.substr(0, colon));
  if (colon == std::string_view::npos) return ChannelSpec::sampled(family);

  const auto arg = text.substr(colon + 1);
  if (arg.starts_with("p=")) {
    if (family == ChannelFamily::GeneralPauli) {
      throw Error(ErrorCode::InvalidConfig, "general channels take a=a1/a2/a3/a4, not p");
    }
    return ChannelSpec::with_p(family, parse_double(arg.substr(2), text));
  }
  if (arg.starts_with("a=")) {
    const auto parts = split(arg.substr(2), '/');
    if (parts.size() != 4) throw Error(ErrorCode::InvalidConfig, "expected four weights in '" + std::string(text) + "'");
    std::array<double, 4> a{};
    for (std::size_t i = 0; i < 4; ++i) a[i] = parse_double(parts[i], text);
    return spec_from_params(family, a);
  }
  throw Error(ErrorCode::InvalidConfig, "bad channel argument in '" + std::string(text) + "'");
}

std::vector<ChannelSpec> parse_channel_list(std::string_view text) {
  std::vector<ChannelSpec> specs;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw Error(ErrorCode::InvalidConfig, "empty entry in channel list");
    specs.push_back(parse_channel_spec(part));
  }
  return specs;
}

ChannelSpec channel_spec_from_json(const Json& j) {
  if (j.is_string()) return parse_channel_spec(j.get<std::string>());
  if (!j.is_object() || !j.contains("family")) {
    throw Error(ErrorCode::InvalidConfig, "channel entry needs a 'family'");
  }
  const auto family_name = j.at("family").get<std::string>();
  if (family_name == "I" || family_name == "id") return ChannelSpec::identity();
  const auto family = parse_family(family_name);
  if (j.contains("a")) {
    const auto a = j.at("a").get<std::vector<double>>();
    if (a.size() != 4) throw Error(ErrorCode::InvalidConfig, "'a' needs four entries");
    return spec_from_params(family, {a[0], a[1], a[2], a[3]});
  }
  if (j.contains("p")) {
    if (family == ChannelFamily::GeneralPauli) {
      throw Error(ErrorCode::InvalidConfig, "general channels take 'a', not 'p'");
    }
    return ChannelSpec::with_p(family, j.at("p").get<double>());
  }
  return ChannelSpec::sampled(family);
}

Json to_json(const ChannelSpec& spec) {
  Json j;
  j["family"] = std::string(to_string(spec.family));
  if (spec.fixed) j["a"] = spec.fixed->a;
  return j;
}

std::vector<KrausChannel> fixed_channels(const std::vector<ChannelSpec>& specs) {
  std::vector<KrausChannel> channels;
  for (const auto& spec : specs) {
    if (!spec.fixed) {
      throw Error(ErrorCode::InvalidConfig,
                  "channel '" + spec.label() + "' needs p= or a= here (sampling is for campaigns)");
    }
    channels.push_back(pauli_channel(*spec.fixed, spec.family));
  }
  return channels;
}

PureState state_from_json(const Json& j) {
  if (j.is_string()) return state_by_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("amplitudes")) {
    throw Error(ErrorCode::InvalidConfig, "state must be a name or {\"amplitudes\": [...]}");
  }
  std::vector<Complex> amps;
  for (const auto& entry : j.at("amplitudes")) {
    if (entry.is_number()) {
      amps.emplace_back(entry.get<double>(), 0.0);
    } else if (entry.is_array() && entry.size() == 2) {
      amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    } else {
      throw Error(ErrorCode::InvalidConfig, "amplitude must be a number or [re, im]");
    }
  }
  return PureState(std::move(amps));
}

CampaignConfig campaign_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, "campaign config must be an object");
  CampaignConfig config;
  try {
    if (j.contains("state")) {
      const auto& s = j.at("state");
      if (s.is_string()) {
        config.state = s.get<std::string>();
      } else {
        const auto psi = state_from_json(s);
        config.state = "custom";
        config.amplitudes.emplace(psi.amplitudes().begin(), psi.amplitudes().end());
      }
    }
    if (!j.contains("channels")) throw Error(ErrorCode::InvalidConfig, "campaign needs 'channels'");
    for (const auto& entry : j.at("channels")) config.channels.push_back(channel_spec_from_json(entry));
    if (j.contains("samples")) config.samples = j.at("samples").get<std::size_t>();
    if (j.contains("tol")) config.tol = j.at("tol").get<double>();
    if (j.contains("seed")) {
      config.seed = j.at("seed").get<std::uint64_t>();
    } else if (auto env = seed_from_env()) {
      config.seed = *env;
    }
    if (j.contains("identity")) {
      const auto id = j.at("identity").get<std::string>();
      if (id != "auto") config.identity = id;
    }
    if (j.contains("normalization_exponent")) {
      const auto& e = j.at("normalization_exponent");
      if (e.is_string()) {
        if (e.get<std::string>() != "auto") {
          throw Error(ErrorCode::InvalidConfig, "normalization_exponent must be \"auto\" or an integer");
        }
      } else {
        config.normalization_exponent = e.get<int>();
      }
    }
    if (j.contains("anchor")) config.anchor = parse_anchor(j.at("anchor").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  validate(config);
  return config;
}

Json to_json(const CampaignConfig& config) {
  Json j;
  if (config.amplitudes) {
    Json amps = Json::array();
    for (const auto& z : *config.amplitudes) amps.push_back({z.real(), z.imag()});
    j["state"] = {{"amplitudes", amps}};
  } else {
    j["state"] = config.state;
  }
  j["channels"] = Json::array();
  for (const auto& spec : config.channels) j["channels"].push_back(to_json(spec));
  j["samples"] = config.samples;
  j["tol"] = config.tol;
  j["seed"] = config.seed;
  j["identity"] = config.identity.value_or("auto");
  if (config.normalization_exponent) {
    j["normalization_exponent"] = *config.normalization_exponent;
  } else {
    j["normalization_exponent"] = "auto";
  }
  j["anchor"] = std::string(to_string(config.anchor));
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, "config file '" + path + "': " + e.what());
  }
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv(kSeedEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidConfig, std::string(kSeedEnv) + " must be a nonnegative integer");
  }
  return seed;
}

}  // namespace conclab
