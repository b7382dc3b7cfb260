#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "conclab/config.hpp"
#include "conclab/factorization.hpp"

namespace conclab {

// tau3 at or below this counts as vanished.
inline constexpr double kVanishTol = 1e-6;

struct SweepSpec {
  std::vector<double> p_grid;
  std::string scenario = "figure1";
  std::string output;

  // `points` equally spaced values covering [0, 0.5].
  static SweepSpec uniform(std::size_t points = 101);
  void validate() const;
};

struct Figure1Row {
  double p = 0.0;
  double tau3_direct = 0.0;     // lower bound of the evolved state
  double approx_product = 0.0;  // every cut replaced by the three-factor product
  double approx_sum = 0.0;      // every cut replaced by the averaged two-term sum
};

struct Figure1Table {
  std::vector<Figure1Row> rows;
  // First p where tau3_direct vanishes, refined by bisection; NaN if it never does.
  double zero_crossing = 0.0;
};

// GHZ3 evolved under three identical BPF(p) channels.
DensityMatrix figure1_state(double p);
Figure1Row figure1_point(double p);
Figure1Table figure1_scan(const SweepSpec& spec);

struct RankRow {
  std::string state;
  std::string channels;  // e.g. "PF,PF,BF"
  int computed = 0;
  int claimed = 0;
};

// Every (state, channel families) pair with a stated rank. Channel strengths
// are fixed, distinct and generic.
std::vector<RankRow> rank_table();

// --- CSV output -----------------------------------------------------------------
// Each file starts with a '#'-prefixed JSON line carrying the configuration.

std::string format_double(double value);

void write_figure1_csv(std::ostream& out, const Figure1Table& table, const Json& header);
void write_rank_table_csv(std::ostream& out, const std::vector<RankRow>& rows, const Json& header);
void write_campaign_csv(std::ostream& out, const CampaignConfig& config, const CampaignReport& report);
void write_density_csv(std::ostream& out, const DensityMatrix& rho, const Json& header);

}  // namespace conclab
