#include <doctest.h>

#include <cmath>
#include <sstream>

#include "conclab/error.hpp"
#include "conclab/experiments.hpp"

using namespace conclab;

TEST_CASE("figure1 endpoints and closed forms") {
  const auto start = figure1_point(0.0);
  CHECK(start.tau3_direct == doctest::Approx(1.0).epsilon(1e-10));
  const auto end = figure1_point(0.5);
  CHECK(end.tau3_direct <= 1e-10);
  for (double p : {0.05, 0.2, 0.33, 0.45}) {
    const auto row = figure1_point(p);
    CHECK(std::abs(row.approx_product - std::pow(1.0 - 2.0 * p, 3)) < 1e-10);
    CHECK(std::abs(row.approx_sum - std::pow(1.0 - 2.0 * p, 2)) < 1e-10);
  }
}

TEST_CASE("figure1 scan on a small grid") {
  const auto table = figure1_scan(SweepSpec::uniform(11));
  CHECK(table.rows.size() == 11);
  CHECK(table.zero_crossing > 0.3);
  CHECK(table.zero_crossing < 0.4);
  for (std::size_t i = 1; i < table.rows.size(); ++i) CHECK(table.rows[i].tau3_direct <= table.rows[i - 1].tau3_direct + 1e-12);
}

TEST_CASE("sweep validation") {
  CHECK_THROWS_AS(SweepSpec::uniform(1), Error);
  SweepSpec bad;
  bad.p_grid = {0.1, 0.7};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.p_grid = {0.3, 0.1};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("rank table rows") {
  const auto rows = rank_table();
  CHECK(rows.size() == 12);
  for (const auto& row : rows) CHECK(row.computed == row.claimed);
}

TEST_CASE("csv writers") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(std::nan("")) == "nan");
  std::ostringstream out;
  write_rank_table_csv(out, rank_table(), Json{{"command", "rank-table"}});
  const auto text = out.str();
  CHECK(text.rfind("# {", 0) == 0);
  CHECK(text.find("state,channels,computed_rank,claimed_rank,match") != std::string::npos);
}
