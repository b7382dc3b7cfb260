#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "conclab/channels.hpp"
#include "conclab/entanglement.hpp"
#include "conclab/error.hpp"
#include "conclab/states.hpp"
#include "oracles.hpp"

using namespace conclab;

TEST_CASE("so generators") {
  const auto g2 = so_generators(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0](0, 1) == Complex(1.0));
  CHECK(g2[0](1, 0) == Complex(-1.0));
  CHECK(so_generators(4).size() == 6);
  CHECK(so_generators(8).size() == 28);
  const auto pairs = generator_pairs(4, 2);
  CHECK(pairs.size() == 6);
  CHECK(pairs.front().m == 1);
  CHECK(pairs.back().m == 6);
  for (const auto& p : pairs) CHECK(p.s_mn.hermiticity_residual() == 0.0);
}

TEST_CASE("bipartition parsing") {
  const auto cut = Bipartition::parse("12|3");
  CHECK(cut.block1() == std::vector<int>{1, 2});
  CHECK(cut.block2() == std::vector<int>{3});
  CHECK(Bipartition::parse("1,3|2,4").label() == "13|24");
  CHECK_THROWS_AS(Bipartition::parse("12|2"), Error);
  CHECK_THROWS_AS(Bipartition::parse("1|3"), Error);
  CHECK_THROWS_AS(Bipartition::parse("123"), Error);
}

TEST_CASE("named state concurrences") {
  CHECK(wootters(bell().density()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters(bell(0.6).density()) == doctest::Approx(0.96).epsilon(1e-12));
  const auto g = ghz(3).density();
  CHECK(concurrence(g, Bipartition::parse("12|3")) == doctest::Approx(1.0).epsilon(1e-12));
  const auto w3 = w(3).density();
  CHECK(concurrence(w3, Bipartition::parse("12|3")) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
  CHECK(tau3(g) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters(DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25))) == 0.0);
  CHECK_THROWS_AS(wootters(g), Error);
}

TEST_CASE("bell under bit flip") {
  for (double p : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    const auto rho = apply(ChannelAssignment::single(2, 2, family_channel(ChannelFamily::BF, p)), bell());
    CHECK(wootters(rho) == doctest::Approx(std::abs(1.0 - 2.0 * p)).epsilon(1e-10));
  }
}

TEST_CASE("wootters matches the characteristic polynomial oracle on full-rank states") {
  // Repeated zero roots make the polynomial route inaccurate below full rank.
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = oracle::random_density(4, 4, rng);
    CHECK(std::abs(wootters(DensityMatrix(m)) - oracle::wootters_charpoly(m)) < 1e-8);
  }
}

TEST_CASE("wootters of pure states matches |<psi*|yy|psi>|") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    const auto psi = random_pure(2, rng);
    const auto amp = psi.amplitudes();
    const double expected = 2.0 * std::abs(amp[0] * amp[3] - amp[1] * amp[2]);
    CHECK(std::abs(wootters(psi.density()) - expected) < 1e-10);
  }
}

TEST_CASE("bipartite measure equals wootters on rank two states") {
  std::mt19937_64 rng(202);
  const auto cut = Bipartition::parse("1|2");
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho(oracle::random_density(4, 1 + static_cast<std::size_t>(trial % 2), rng));
    CHECK(std::abs(bipartite_concurrence(rho, cut).total - wootters(rho)) <= 1e-8);
  }
}

TEST_CASE("local unitaries leave wootters unchanged") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_density(4, 2, rng);
    const auto u = kron(oracle::random_unitary_2x2(rng), oracle::random_unitary_2x2(rng));
    const auto rotated = u * m * u.adjoint();
    CHECK(std::abs(wootters(DensityMatrix(m)) - wootters(DensityMatrix(rotated))) < 1e-10);
  }
}

TEST_CASE("pure multi-qubit states match the partial trace oracle") {
  std::mt19937_64 rng(404);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto psi = random_pure(n, rng);
      const auto rho = psi.density();
      for (const char* text : {"12|3", "1|23", "13|2"}) {
        if (n != 3) break;
        const auto cut = Bipartition::parse(text);
        CHECK(std::abs(bipartite_concurrence(rho, cut).total -
                       oracle::pure_state_concurrence(rho.matrix(), n, cut.block2())) <= 1e-8);
      }
      for (const char* text : {"123|4", "12|34", "14|23", "2|134"}) {
        if (n != 4) break;
        const auto cut = Bipartition::parse(text);
        CHECK(std::abs(bipartite_concurrence(rho, cut).total -
                       oracle::pure_state_concurrence(rho.matrix(), n, cut.block2())) <= 1e-8);
      }
    }
  }
}

TEST_CASE("both lambda routes agree") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho(oracle::random_density(8, 1 + static_cast<std::size_t>(trial % 2), rng));
    for (const auto& pair : generator_pairs(4, 2)) {
      const auto s = permute_qubits(rho, std::vector<int>{1, 2, 3});
      const auto lambdas = inversion_lambdas(s, pair.s_mn);
      const auto spectrum = inversion_spectrum(s, pair.s_mn);
      for (std::size_t k = 0; k < 4; ++k) {
        const double a = k < lambdas.size() ? lambdas[k] * lambdas[k] : 0.0;
        CHECK(std::abs(a - spectrum[k]) < 1e-7);
      }
      for (std::size_t k = 4; k < spectrum.size(); ++k) CHECK(std::abs(spectrum[k]) < 1e-8);
    }
  }
}

TEST_CASE("relabeling qubits permutes the cut") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho(oracle::random_density(8, 2, rng));
    const std::vector<int> perm{2, 3, 1};
    const auto moved = permute_qubits(rho, perm);
    // new qubits 1,2 are old 2,3; new 3 is old 1
    const double a = concurrence(rho, Bipartition::parse("23|1"));
    const double b = concurrence(moved, Bipartition::parse("12|3"));
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("breakdown terms") {
  const auto b = bipartite_concurrence(ghz(3).density(), Bipartition::parse("12|3"));
  CHECK(b.per_pair.size() == 6);
  double sum2 = 0.0;
  for (const auto& t : b.per_pair) {
    CHECK(t.c_mn >= 0.0);
    CHECK(t.max_discarded <= kLeakTol);
    sum2 += t.c_mn * t.c_mn;
  }
  CHECK(std::sqrt(sum2) == doctest::Approx(b.total));
}

TEST_CASE("mean concurrence of random two-qubit pure states") {
  std::mt19937_64 rng(707);
  double sum = 0.0;
  const int samples = 4000;
  for (int i = 0; i < samples; ++i) sum += wootters(random_pure(2, rng).density());
  CHECK(std::abs(sum / samples - 3.0 * std::numbers::pi / 16.0) < 0.05);
}
