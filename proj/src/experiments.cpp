#include "conclab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace conclab {

SweepSpec SweepSpec::uniform(std::size_t points) {
  if (points < 2) throw Error(ErrorCode::InvalidConfig, "a sweep needs at least two points");
  SweepSpec spec;
  spec.p_grid.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    spec.p_grid[i] = 0.5 * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return spec;
}

void SweepSpec::validate() const {
  if (scenario != "figure1") throw Error(ErrorCode::InvalidConfig, "unknown scenario '" + scenario + "'");
  if (p_grid.empty()) throw Error(ErrorCode::InvalidConfig, "empty p grid");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0 && p_grid[i] <= 0.5)) {
      throw Error(ErrorCode::InvalidConfig, "p grid must lie in [0, 0.5]");
    }
    if (i > 0 && p_grid[i] < p_grid[i - 1]) {
      throw Error(ErrorCode::InvalidConfig, "p grid must be sorted ascending");
    }
  }
}

namespace {

std::vector<KrausChannel> bpf_channels(double p) {
  const auto ch = family_channel(ChannelFamily::BPF, p);
  return {ch, ch, ch};
}

double rms(double a, double b, double c) { return std::sqrt((a * a + b * b + c * c) / 3.0); }

}  // namespace

DensityMatrix figure1_state(double p) {
  return apply(ChannelAssignment::many_sided(bpf_channels(p)), ghz(3));
}

Figure1Row figure1_point(double p) {
  Figure1Row row;
  row.p = p;
  row.tau3_direct = tau3(figure1_state(p));

  // Each cut ab|c is brought to 12|3 form, so the single-sided factors act on c.
  const auto psi = ghz(3);
  const auto channels = bpf_channels(p);
  const auto product_form = identity_by_name("eq9");
  const auto sum_form = identity_by_name("eq11");
  EvaluationOptions options;
  options.relabel = false;

  std::array<double, 3> product{}, sum{};
  const std::array<std::array<int, 3>, 3> cuts{{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const auto relabeled = psi.permuted(cuts[k]);
    std::vector<KrausChannel> ordered;
    for (int q : cuts[k]) ordered.push_back(channels[q - 1]);
    product[k] = evaluate_identity(product_form, relabeled, ordered, options).rhs;
    const double terms = static_cast<double>(sum_form.rhs_terms.size());
    sum[k] = evaluate_identity(sum_form, relabeled, ordered, options).rhs / terms;
  }
  row.approx_product = rms(product[0], product[1], product[2]);
  row.approx_sum = rms(sum[0], sum[1], sum[2]);
  return row;
}

Figure1Table figure1_scan(const SweepSpec& spec) {
  spec.validate();
  Figure1Table table;
  for (double p : spec.p_grid) table.rows.push_back(figure1_point(p));

  table.zero_crossing = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].tau3_direct > kVanishTol) continue;
    if (i == 0) {
      table.zero_crossing = table.rows[0].p;
      break;
    }
    double lo = table.rows[i - 1].p;
    double hi = table.rows[i].p;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      if (tau3(figure1_state(mid)) > kVanishTol) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    table.zero_crossing = hi;
    break;
  }
  return table;
}

std::vector<RankRow> rank_table() {
  struct Scenario {
    std::string state;
    std::vector<ChannelFamily> families;
    int claimed;
  };
  using F = ChannelFamily;
  const std::vector<Scenario> scenarios{
      {"bell", {F::BF, F::BF}, 2},
      {"bell", {F::PF, F::PF}, 2},
      {"bell", {F::BPF, F::BPF}, 2},
      {"ghz3", {F::PF, F::PF, F::PF}, 2},
      {"ghz3", {F::BF, F::BF, F::BF}, 4},
      {"ghz3", {F::PF, F::PF, F::BF}, 4},
      {"ghz3", {F::PF, F::PF, F::BPF}, 4},
      {"w3", {F::PF, F::PF, F::PF}, 3},
      {"ghz4", {F::PF, F::PF, F::PF, F::PF}, 2},
      {"ghz4", {F::PF, F::PF, F::PF, F::BF}, 4},
      {"w4", {F::PF, F::PF, F::PF, F::PF}, 4},
      {"ghz3", {F::BPF, F::BPF, F::BPF}, 8},
  };
  constexpr std::array<double, 4> strengths{0.1, 0.2, 0.3, 0.4};

  std::vector<RankRow> rows;
  for (const auto& s : scenarios) {
    std::vector<KrausChannel> channels;
    std::string label;
    for (std::size_t k = 0; k < s.families.size(); ++k) {
      channels.push_back(family_channel(s.families[k], strengths[k]));
      if (k > 0) label += ',';
      label += to_string(s.families[k]);
    }
    const int rank = classify_scenario(state_by_name(s.state), channels).final_rank;
    rows.push_back({s.state, label, rank, s.claimed});
  }
  return rows;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  return fmt::format("{:.17g}", value);
}

namespace {

void write_header(std::ostream& out, const Json& header) { out << "# " << header.dump() << '\n'; }

}  // namespace

void write_figure1_csv(std::ostream& out, const Figure1Table& table, const Json& header) {
  write_header(out, header);
  out << "p,tau3_direct,approx_product,approx_sum\n";
  for (const auto& row : table.rows) {
    out << format_double(row.p) << ',' << format_double(row.tau3_direct) << ','
        << format_double(row.approx_product) << ',' << format_double(row.approx_sum) << '\n';
  }
  out << "# zero_crossing=" << format_double(table.zero_crossing) << '\n';
}

void write_rank_table_csv(std::ostream& out, const std::vector<RankRow>& rows, const Json& header) {
  write_header(out, header);
  out << "state,channels,computed_rank,claimed_rank,match\n";
  for (const auto& row : rows) {
    out << row.state << ",\"" << row.channels << "\"," << row.computed << ',' << row.claimed << ','
        << (row.computed == row.claimed ? 1 : 0) << '\n';
  }
}

void write_campaign_csv(std::ostream& out, const CampaignConfig& config, const CampaignReport& report) {
  Json header{{"command", "campaign"}, {"config", to_json(config)}};
  write_header(out, header);
  out << "seed,rank,lhs,rhs,residual,pass\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& s : report.samples) {
    const auto& r = s.report;
    out << s.seed << ',' << s.rank << ',' << format_double(r ? r->lhs : nan) << ','
        << format_double(r ? r->rhs : nan) << ',' << format_double(r ? r->residual : nan) << ','
        << (s.pass ? 1 : 0) << '\n';
  }
  out << "# summary\n";
  out << "# rank,samples,evaluated,passed,max_residual,failure_seeds\n";
  for (const auto& [rank, b] : report.buckets) {
    out << "# " << rank << ',' << b.samples << ',' << b.evaluated << ',' << b.passed << ','
        << format_double(b.max_residual) << ',' << fmt::format("{}", fmt::join(b.failure_seeds, " "))
        << '\n';
  }
}

void write_density_csv(std::ostream& out, const DensityMatrix& rho, const Json& header) {
  write_header(out, header);
  out << "row,col,re,im\n";
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      const auto z = rho.matrix()(i, j);
      out << i << ',' << j << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
    }
  }
}

}  // namespace conclab
