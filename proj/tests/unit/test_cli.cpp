#include <doctest.h>

#include <sstream>
#include <string>

#include "conclab/cli.hpp"

using namespace conclab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Value in the first CSV line that starts with `prefix`.
double field(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
  }
  return -1.0;
}

}  // namespace

TEST_CASE("verify eq7") {
  const auto r = run({"verify", "--identity", "eq7", "--state", "bell", "--channels", "BF:p=0.2,BF:p=0.3"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "lhs,") == doctest::Approx(0.24).epsilon(1e-12));
  CHECK(r.out.find("pass,1") != std::string::npos);
}

TEST_CASE("concurrence of ghz3") {
  const auto r = run({"concurrence", "--state", "ghz3", "--cut", "12|3"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "bipartite,12|3,") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("campaign output is deterministic") {
  const std::vector<std::string> args{"campaign", "--state", "bell", "--channels", "PF,PF", "--samples", "20", "--seed", "3"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed,rank,lhs,rhs,residual,pass") != std::string::npos);
}

TEST_CASE("usage and validation errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"verify", "--identity", "eq99", "--state", "bell", "--channels", "BF,BF"}).code == 1);
  CHECK(run({"evolve", "--state", "bell", "--channels", "BF:p=0.1"}).code == 1);
  CHECK(run({"evolve", "--state", "bell:alpha=2", "--channels", "I,I"}).code == 1);
}

TEST_CASE("evolve writes a density csv") {
  const auto r = run({"evolve", "--state", "bell", "--channels", "BF:p=0.1,I"});
  CHECK(r.code == 0);
  CHECK(r.out.find("row,col,re,im") != std::string::npos);
}
