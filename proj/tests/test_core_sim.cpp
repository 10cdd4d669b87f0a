#include <doctest.h>

#include <random>

#include "sqft/qft.hpp"
#include "sqft/simulator.hpp"

using namespace sqft;

namespace {

StateVector random_state(int n, std::mt19937_64& rng) {
  StateVector s(n);
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < s.amps.size(); ++i) s.amps(i) = complexd(g(rng), g(rng));
  s.amps.normalize();
  return s;
}

}  // namespace

TEST_CASE("hadamard on |0>") {
  StateVector s(1);
  ClassicalBits cl;
  std::mt19937_64 rng;
  apply(s, SingleQubitOp{gate_h(), 0}, cl, rng);
  CHECK(std::abs(s.amps(0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(s.amps(1) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("cx truth table") {
  StateVector s = StateVector::basis(2, 0b10);  // control = qubit 1
  ClassicalBits cl;
  std::mt19937_64 rng;
  apply(s, CxOp{1, 0}, cl, rng);
  CHECK(std::abs(s.amps(0b11) - 1.0) < 1e-12);
}

TEST_CASE("conditioned phase applies S when the bit is set") {
  StateVector s(1);
  ClassicalBits cl{1};
  std::mt19937_64 rng;
  apply(s, SingleQubitOp{gate_h(), 0}, cl, rng);
  apply(s, ConditionedPhaseOp{0, 1, Dyadic(1, 2), 0}, cl, rng);  // 1/4 cycle
  CHECK(std::abs(s.amps(1) - complexd(0, 1) / std::sqrt(2.0)) < 1e-12);

  cl[0] = 0;  // condition off: identity
  StateVector u(1);
  apply(u, SingleQubitOp{gate_h(), 0}, cl, rng);
  apply(u, ConditionedPhaseOp{0, 1, Dyadic(1, 2), 0}, cl, rng);
  CHECK(std::abs(u.amps(1) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("conditioned phase on unassigned bit throws") {
  StateVector s(1);
  ClassicalBits cl{-1};
  std::mt19937_64 rng;
  CHECK_THROWS_AS(apply(s, ConditionedPhaseOp{0, 1, Dyadic(1, 2), 0}, cl, rng),
                  std::logic_error);
}

TEST_CASE("gate index out of range throws") {
  StateVector s(1);
  ClassicalBits cl;
  std::mt19937_64 rng;
  CHECK_THROWS_AS(apply(s, SingleQubitOp{gate_h(), 3}, cl, rng), std::out_of_range);
}

TEST_CASE("enumerate: H then measure") {
  Circuit c;
  c.num_qubits = 1;
  c.num_clbits = 1;
  c.add(SingleQubitOp{gate_h(), 0});
  c.add(MeasureOp{0, 0});
  auto d = enumerate_branches(c, StateVector(1));
  CHECK(d.prob(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d.prob(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("enumerate: deterministic projection") {
  Circuit c;
  c.num_qubits = 1;
  c.num_clbits = 1;
  c.add(MeasureOp{0, 0});
  auto d = enumerate_branches(c, StateVector::basis(1, 1));
  CHECK(d.prob(1) == doctest::Approx(1.0));
  CHECK(d.p.size() == 1);
}

TEST_CASE("enumerate: standard QFT on |000> is uniform") {
  auto d = enumerate_branches(build_standard_qft_measured(3), StateVector(3));
  // oracle: |DFT e_0|^2
  StateVector f = dft_apply(StateVector(3));
  for (std::uint64_t c = 0; c < 8; ++c)
    CHECK(d.prob(c) == doctest::Approx(std::norm(f.amps(c))).epsilon(1e-10));
}

TEST_CASE("enumerate respects the branch cap") {
  Circuit c;
  c.num_qubits = 3;
  c.num_clbits = 3;
  for (int q = 0; q < 3; ++q) {
    c.add(SingleQubitOp{gate_h(), q});
    c.add(MeasureOp{q, q});
  }
  CHECK_THROWS_AS(enumerate_branches(c, StateVector(3), 4), CapacityError);
}

TEST_CASE("branch completeness and norm preservation on random circuits") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Circuit c;
    c.num_qubits = n;
    c.num_clbits = n;
    for (int i = 0; i < 8; ++i) {
      int q = static_cast<int>(rng() % n);
      switch (rng() % 3) {
        case 0: c.add(SingleQubitOp{gate_h(), q}); break;
        case 1: c.add(SingleQubitOp{gate_t(), q}); break;
        default:
          if (n > 1) {
            int q2 = (q + 1) % n;
            c.add(CxOp{q, q2});
          }
      }
    }
    for (int q = 0; q < n; ++q) c.add(MeasureOp{q, q});
    StateVector input = random_state(n, rng);
    auto d = enumerate_branches(c, input);
    CHECK(std::abs(d.total() - 1.0) < 1e-9);
  }
}

TEST_CASE("sampling matches binomial expectation and is seed-reproducible") {
  Circuit c;
  c.num_qubits = 1;
  c.num_clbits = 1;
  c.add(SingleQubitOp{gate_h(), 0});
  c.add(MeasureOp{0, 0});
  auto d1 = sample(c, StateVector(1), 8192, 42);
  auto d2 = sample(c, StateVector(1), 8192, 42);
  CHECK(d1.p == d2.p);
  CHECK(std::abs(d1.prob(0) - 0.5) <= 0.02);
}

TEST_CASE("single shot on a deterministic circuit") {
  Circuit c;
  c.num_qubits = 2;
  c.num_clbits = 2;
  c.add(SingleQubitOp{gate_x(), 1});
  c.add(MeasureOp{0, 0});
  c.add(MeasureOp{1, 1});
  auto d = sample(c, StateVector(2), 1, 7);
  CHECK(d.prob(0b10) == doctest::Approx(1.0));
}

TEST_CASE("sampling consistency against enumeration") {
  std::mt19937_64 rng(5);
  Circuit c = build_standard_qft_measured(3);
  StateVector input = random_state(3, rng);
  auto exact = enumerate_branches(c, input);
  auto emp = sample(c, input, 100000, 99);
  CHECK(total_variation(exact, emp) <= 0.02);
}

TEST_CASE("circuit validation catches bad wiring") {
  Circuit c;
  c.num_qubits = 2;
  c.num_clbits = 1;
  c.add(ConditionedPhaseOp{0, 1, Dyadic(1, 2), 0});  // reads before any measure
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
