#include <doctest.h>

#include <random>

#include "conclab/channels.hpp"
#include "conclab/error.hpp"
#include "conclab/states.hpp"
#include "oracles.hpp"

using namespace conclab;

namespace {

void check_cptp(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  CHECK(std::abs(m.trace() - Complex(1.0)) < 1e-10);
  CHECK(m.hermiticity_residual() < 1e-10);
  CHECK(rho.min_eigenvalue() >= -1e-9);
}

}  // namespace

TEST_CASE("family channels have the expected kraus operators") {
  const auto bf = family_channel(ChannelFamily::BF, 0.25);
  CHECK(bf.ops().size() == 2);
  CHECK(bf.completeness_residual() < 1e-15);
  CHECK(max_abs_diff(bf.ops()[1], pauli::X() * Complex(0.5)) < 1e-15);
  const auto bpf = family_channel(ChannelFamily::BPF, 0.25);
  CHECK(max_abs_diff(bpf.ops()[1], pauli::Y() * Complex(0.5)) < 1e-15);
  const auto pf = family_channel(ChannelFamily::PF, 0.25);
  CHECK(max_abs_diff(pf.ops()[1], pauli::Z() * Complex(0.5)) < 1e-15);
}

TEST_CASE("parameter validation") {
  PauliParams p;
  p.a = {0.5, 0.5, 0.0, 0.0};
  CHECK_THROWS_AS(p.validate(), Error);
  p.a = {std::sqrt(0.5), 0.0, std::sqrt(0.5), 0.0};
  CHECK_NOTHROW(p.validate(ChannelFamily::BPF));
  CHECK_THROWS_AS(p.validate(ChannelFamily::BF), Error);
  CHECK_THROWS_AS(family_channel(ChannelFamily::PF, 1.5), Error);
  CHECK_THROWS_AS(KrausChannel({pauli::X() * Complex(0.5)}), Error);
  CHECK(parse_family("BPF") == ChannelFamily::BPF);
  CHECK_THROWS_AS(parse_family("XY"), Error);
}

TEST_CASE("sampled channels are normalized and stay in family") {
  std::mt19937_64 rng(17);
  for (auto family : {ChannelFamily::BF, ChannelFamily::PF, ChannelFamily::BPF, ChannelFamily::GeneralPauli}) {
    for (int i = 0; i < 100; ++i) {
      const auto ch = sample_channel(family, rng);
      CHECK(ch.completeness_residual() < 1e-12);
      CHECK_NOTHROW(ch.params()->validate(family));
    }
  }
}

TEST_CASE("many-sided application matches explicit kraus products") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const auto rho = oracle::random_density(std::size_t{1} << n, 2, rng);
    std::vector<KrausChannel> chans;
    std::vector<std::vector<ComplexMatrix>> ops;
    for (int q = 0; q < n; ++q) {
      chans.push_back(sample_channel(ChannelFamily::GeneralPauli, rng));
      ops.push_back(chans.back().ops());
    }
    const auto out = apply(ChannelAssignment::many_sided(chans), DensityMatrix(rho));
    CHECK(max_abs_diff(out.matrix(), oracle::naive_apply(ops, rho)) < 1e-13);
    check_cptp(out);
  }
}

TEST_CASE("channels on different qubits commute") {
  std::mt19937_64 rng(29);
  const auto psi = random_pure(3, rng);
  const auto a = sample_channel(ChannelFamily::GeneralPauli, rng);
  const auto b = sample_channel(ChannelFamily::GeneralPauli, rng);
  const auto ab = apply(ChannelAssignment::single(3, 3, b), apply(ChannelAssignment::single(3, 1, a), psi));
  const auto ba = apply(ChannelAssignment::single(3, 1, a), apply(ChannelAssignment::single(3, 3, b), psi));
  CHECK(max_abs_diff(ab.matrix(), ba.matrix()) < 1e-14);
  const auto both = apply(ChannelAssignment(3, {{1, a}, {3, b}}), psi);
  CHECK(max_abs_diff(ab.matrix(), both.matrix()) < 1e-14);
}

TEST_CASE("identity channel leaves the state alone") {
  const auto psi = ghz(3);
  const auto out = apply(ChannelAssignment::many_sided({identity_channel(), identity_channel(), identity_channel()}), psi);
  CHECK(max_abs_diff(out.matrix(), psi.density().matrix()) < 1e-15);
}

TEST_CASE("single_sided and arity checks") {
  const auto psi = bell();
  const auto bf = family_channel(ChannelFamily::BF, 0.3);
  const auto s = single_sided(bf, 2, psi);
  check_cptp(s);
  CHECK(s.rank() == 2);
  CHECK_THROWS_AS(apply(ChannelAssignment::many_sided({bf, bf, bf}), psi), Error);
  CHECK_THROWS_AS(ChannelAssignment(2, {{3, bf}}), Error);
}
