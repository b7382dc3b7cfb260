#include <doctest.h>

#include <cmath>
#include <random>

#include "conclab/error.hpp"
#include "conclab/states.hpp"

using namespace conclab;

TEST_CASE("named states") {
  const auto b = bell();
  CHECK(b.n_qubits() == 2);
  CHECK(std::abs(b.amplitudes()[0] - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(b.amplitudes()[3] - Complex(1.0 / std::sqrt(2.0))) < 1e-15);

  const auto g = ghz(4);
  CHECK(g.amplitudes().size() == 16);
  CHECK(std::abs(g.amplitudes()[15]) == doctest::Approx(1.0 / std::sqrt(2.0)));

  const auto w3 = w(3);
  for (std::size_t idx : {1U, 2U, 4U}) CHECK(std::abs(w3.amplitudes()[idx]) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(w3.amplitudes()[0]) == 0.0);

  const auto a = bell(0.6);
  CHECK(std::abs(a.amplitudes()[0]) == doctest::Approx(0.6));
  CHECK(std::abs(a.amplitudes()[3]) == doctest::Approx(0.8));
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(bell(1.5), Error);
  CHECK_THROWS_AS(ghz(5), Error);
  CHECK_THROWS_AS(w(2), Error);
  CHECK_THROWS_AS(PureState({1.0, 1.0}), Error);
  CHECK_THROWS_AS(PureState({1.0, 0.0, 0.0}), Error);
  CHECK_THROWS_AS(state_by_name("cat"), Error);
  CHECK(state_by_name("bell:alpha=0.3").n_qubits() == 2);
  CHECK(state_by_name("w4").n_qubits() == 4);
}

TEST_CASE("random pure states are normalized and reproducible") {
  std::mt19937_64 a(77), b(77);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_pure(3, a);
    const auto y = random_pure(3, b);
    double norm = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
      norm += std::norm(x.amplitudes()[k]);
      CHECK(x.amplitudes()[k] == y.amplitudes()[k]);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
  }
}
