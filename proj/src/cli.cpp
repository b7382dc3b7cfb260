#include "conclab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "conclab/experiments.hpp"

namespace conclab {

namespace {

// Writes to --out when given, else to the command's stdout stream.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidConfig, "cannot write '" + path + "'");
  write(file);
}

Json config_or_empty(const std::string& path) { return path.empty() ? Json::object() : load_json_file(path); }

PureState resolve_state(const std::string& flag, const Json& config) {
  if (!flag.empty()) return state_by_name(flag);
  if (config.contains("state")) return state_from_json(config.at("state"));
  throw Error(ErrorCode::InvalidConfig, "no state given (--state or config \"state\")");
}

std::vector<ChannelSpec> resolve_channels(const std::string& flag, const Json& config) {
  if (!flag.empty()) return parse_channel_list(flag);
  std::vector<ChannelSpec> specs;
  if (config.contains("channels")) {
    for (const auto& entry : config.at("channels")) specs.push_back(channel_spec_from_json(entry));
  }
  return specs;
}

DensityMatrix read_density_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open matrix file '" + path + "'");
  std::vector<std::tuple<std::size_t, std::size_t, Complex>> entries;
  std::size_t dim = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#' || line.starts_with("row")) continue;
    std::istringstream fields(line);
    std::size_t i = 0, j = 0;
    double re = 0.0, im = 0.0;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(fields >> i >> c1 >> j >> c2 >> re >> c3 >> im) || c1 != ',' || c2 != ',' || c3 != ',') {
      throw Error(ErrorCode::InvalidConfig, "bad matrix line '" + line + "'");
    }
    dim = std::max({dim, i + 1, j + 1});
    entries.emplace_back(i, j, Complex(re, im));
  }
  ComplexMatrix m(dim);
  for (const auto& [i, j, z] : entries) m(i, j) = z;
  return DensityMatrix(std::move(m));
}

std::vector<Bipartition> default_cuts(int n) {
  switch (n) {
    case 2: return {Bipartition({1}, {2})};
    case 3: return {Bipartition({1, 2}, {3}), Bipartition({1, 3}, {2}), Bipartition({2, 3}, {1})};
    case 4: return {Bipartition({1, 2, 3}, {4}), Bipartition({1, 2}, {3, 4})};
    default: break;
  }
  throw Error(ErrorCode::UnsupportedN, "pass --cut for a " + std::to_string(n) + "-qubit state");
}

void write_concurrence(std::ostream& out, const DensityMatrix& rho, const std::vector<Bipartition>& cuts,
                       bool breakdown, const Json& header) {
  out << "# " << header.dump() << '\n';
  out << "measure,cut,value\n";
  std::vector<std::pair<std::string, ConcurrenceBreakdown>> details;
  for (const auto& cut : cuts) {
    if (rho.n_qubits() == 2) out << "wootters," << cut.label() << ',' << format_double(wootters(rho)) << '\n';
    auto b = bipartite_concurrence(rho, cut);
    out << "bipartite," << cut.label() << ',' << format_double(b.total) << '\n';
    details.emplace_back(cut.label(), std::move(b));
  }
  if (rho.n_qubits() == 3) out << "tau3,," << format_double(tau3(rho)) << '\n';
  out << "rank,," << rho.rank() << '\n';
  if (!breakdown) return;
  out << "\ncut,m,n,lambda1,lambda2,lambda3,lambda4,c_mn\n";
  for (const auto& [label, b] : details) {
    for (const auto& t : b.per_pair) {
      out << label << ',' << t.m << ',' << t.n;
      for (double l : t.lambda) out << ',' << format_double(l);
      out << ',' << format_double(t.c_mn) << '\n';
    }
  }
}

void write_report(std::ostream& out, const IdentityReport& r, double tol, const Json& header) {
  out << "# " << header.dump() << '\n';
  out << "field,value\n";
  out << "identity," << r.identity << '\n';
  out << "cut," << r.cut << '\n';
  out << "lhs," << format_double(r.lhs) << '\n';
  out << "rhs," << format_double(r.rhs) << '\n';
  out << "residual," << format_double(r.residual) << '\n';
  out << "pass," << (r.residual <= tol ? 1 : 0) << '\n';
  out << "initial_concurrence," << format_double(r.initial_concurrence) << '\n';
  out << "normalization_exponent," << r.normalization_exponent << '\n';
  out << "final_rank," << r.final_rank << '\n';
  out << "applicable," << (r.applicable ? 1 : 0) << '\n';
  out << "anchor," << to_string(r.anchor) << '\n';
  for (std::size_t k = 0; k < r.primary.factors.size(); ++k) {
    out << "factor" << k + 1 << ',' << format_double(r.primary.factors[k]) << '\n';
    out << "factor" << k + 1 << "_rank," << r.primary.ranks[k] << '\n';
  }
  out << "rhs_alternate_anchor," << format_double(r.alternate.rhs) << '\n';
  out << "residual_alternate_anchor," << format_double(r.alternate.residual) << '\n';
  std::string relabel;
  for (int q : r.relabeling) relabel += std::to_string(q);
  out << "relabeling," << relabel << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement evolution of 2-4 qubit states under local Pauli channels"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);

  std::string state, channels, out_path, cut_text, identity_name, anchor = "last", matrix_path;
  int exponent = -1;
  double tol = 1e-8;
  std::size_t samples = 0, points = 101;
  std::uint64_t seed = 0;
  bool breakdown = false;

  auto* evolve = app.add_subcommand("evolve", "Evolve a state and dump the density matrix");
  evolve->add_option("--state", state, "bell, bell:alpha=X, ghz3, w3, ghz4, w4");
  evolve->add_option("--channels", channels, "per-qubit channels, e.g. BF:p=0.2,PF:p=0.1");
  evolve->add_option("--out", out_path, "output CSV (default stdout)");

  auto* conc = app.add_subcommand("concurrence", "Concurrence measures of a state or matrix");
  conc->add_option("--state", state);
  conc->add_option("--channels", channels);
  conc->add_option("--matrix", matrix_path, "density matrix CSV as written by evolve")
      ->check(CLI::ExistingFile);
  conc->add_option("--cut", cut_text, "bipartition such as 12|3");
  conc->add_flag("--breakdown", breakdown, "per generator pair lambdas and C_mn");
  conc->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Evaluate one factorization identity");
  verify->add_option("--identity", identity_name, "eq7, eq9, eq11, eq13, eq14, eq15, eq16");
  verify->add_option("--state", state);
  verify->add_option("--channels", channels);
  verify->add_option("--anchor", anchor, "last or own")->check(CLI::IsMember({"last", "own"}));
  verify->add_option("--exponent", exponent, "power of C(psi) on the left-hand side");
  verify->add_option("--tol", tol);
  verify->add_option("--out", out_path);

  auto* campaign = app.add_subcommand("campaign", "Seeded randomized identity verification");
  campaign->add_option("--state", state);
  campaign->add_option("--channels", channels, "families (sampled) or fixed specs, one per qubit");
  campaign->add_option("--samples", samples);
  campaign->add_option("--tol", tol);
  campaign->add_option("--seed", seed);
  campaign->add_option("--identity", identity_name, "auto or an identity name");
  campaign->add_option("--exponent", exponent);
  campaign->add_option("--anchor", anchor)->check(CLI::IsMember({"last", "own"}));
  campaign->add_option("--out", out_path);

  auto* fig = app.add_subcommand("figure1", "tau3 of GHZ3 under three BPF(p) channels");
  fig->add_option("--points", points, "grid size over [0, 0.5]");
  fig->add_option("--out", out_path);

  auto* ranks = app.add_subcommand("rank-table", "Final-state ranks of the named scenarios");
  ranks->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    const Json config = config_or_empty(config_path);
    Json header{{"command", app.get_subcommands().front()->get_name()}};

    if (evolve->parsed()) {
      const auto psi = resolve_state(state, config);
      const auto chans = fixed_channels(resolve_channels(channels, config));
      const auto rho = chans.empty() ? psi.density() : apply(ChannelAssignment::many_sided(chans), psi);
      header["state"] = psi.name();
      header["channels"] = Json::array();
      for (const auto& c : chans) header["channels"].push_back(c.describe());
      header["rank"] = rho.rank();
      emit(out_path, out, [&](std::ostream& o) { write_density_csv(o, rho, header); });
    } else if (conc->parsed()) {
      std::optional<DensityMatrix> rho;
      if (!matrix_path.empty()) {
        rho = read_density_csv(matrix_path);
        header["matrix"] = matrix_path;
      } else {
        const auto psi = resolve_state(state, config);
        const auto chans = fixed_channels(resolve_channels(channels, config));
        rho = chans.empty() ? psi.density() : apply(ChannelAssignment::many_sided(chans), psi);
        header["state"] = psi.name();
      }
      const auto cuts = cut_text.empty() ? default_cuts(rho->n_qubits())
                                         : std::vector<Bipartition>{Bipartition::parse(cut_text)};
      emit(out_path, out, [&](std::ostream& o) { write_concurrence(o, *rho, cuts, breakdown, header); });
    } else if (verify->parsed()) {
      if (identity_name.empty()) identity_name = config.value("identity", std::string());
      if (identity_name.empty()) throw Error(ErrorCode::InvalidConfig, "verify needs --identity");
      const auto identity = identity_by_name(identity_name);
      const auto psi = resolve_state(state, config);
      const auto chans = fixed_channels(resolve_channels(channels, config));
      EvaluationOptions options;
      options.anchor = parse_anchor(anchor);
      if (exponent >= 0) options.normalization_exponent = exponent;
      const auto report = evaluate_identity(identity, psi, chans, options);
      header["identity"] = identity.name;
      header["state"] = psi.name();
      header["tol"] = tol;
      emit(out_path, out, [&](std::ostream& o) { write_report(o, report, tol, header); });
    } else if (campaign->parsed()) {
      Json merged = config;
      if (!state.empty()) merged["state"] = state;
      if (!channels.empty()) {
        merged["channels"] = Json::array();
        for (const auto& part : parse_channel_list(channels)) merged["channels"].push_back(to_json(part));
      }
      if (campaign->count("--samples") > 0) merged["samples"] = samples;
      if (campaign->count("--tol") > 0) merged["tol"] = tol;
      if (campaign->count("--seed") > 0) merged["seed"] = seed;
      if (!identity_name.empty()) merged["identity"] = identity_name;
      if (exponent >= 0) merged["normalization_exponent"] = exponent;
      if (campaign->count("--anchor") > 0) merged["anchor"] = anchor;
      const auto cfg = campaign_from_json(merged);
      const auto report = run_campaign(cfg);
      emit(out_path, out, [&](std::ostream& o) { write_campaign_csv(o, cfg, report); });
    } else if (fig->parsed()) {
      if (config.contains("points") && fig->count("--points") == 0) points = config.at("points").get<std::size_t>();
      auto spec = SweepSpec::uniform(points);
      spec.output = out_path;
      const auto table = figure1_scan(spec);
      header["points"] = points;
      header["scenario"] = "ghz3 under BPF(p) x3";
      emit(out_path, out, [&](std::ostream& o) { write_figure1_csv(o, table, header); });
    } else if (ranks->parsed()) {
      const auto rows = rank_table();
      emit(out_path, out, [&](std::ostream& o) { write_rank_table_csv(o, rows, header); });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_assertion() ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace conclab
