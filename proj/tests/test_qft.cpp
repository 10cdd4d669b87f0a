#include <doctest.h>

#include <random>

#include "sqft/qft.hpp"

using namespace sqft;

TEST_CASE("dft oracle basics") {
  Eigen::MatrixXcd m1 = dft_matrix(1);
  CHECK(max_abs_diff(m1, gate_h().m) < 1e-12);

  StateVector f3 = dft_apply(StateVector(3));
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(f3.amps(i) - 1.0 / std::sqrt(8.0)) < 1e-12);

  // (|0>+|2>+|4>+|6>)/2 -> (|0>+|4>)/sqrt(2)
  StateVector s(3);
  s.amps.setZero();
  for (int v : {0, 2, 4, 6}) s.amps(v) = 0.5;
  StateVector out = dft_apply(s);
  CHECK(std::abs(out.amps(0) - 1.0 / std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(out.amps(4) - 1.0 / std::sqrt(2.0)) < 1e-10);
  for (int v : {1, 2, 3, 5, 6, 7}) CHECK(std::abs(out.amps(v)) < 1e-10);
}

TEST_CASE("dft is unitary and invertible") {
  for (int n = 1; n <= 6; ++n) CHECK(is_unitary(dft_matrix(n), 1e-10));
  std::mt19937_64 rng(3);
  StateVector s(4);
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < s.amps.size(); ++i) s.amps(i) = complexd(g(rng), g(rng));
  s.amps.normalize();
  StateVector back = dft_apply_inverse(dft_apply(s));
  CHECK((back.amps - s.amps).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("standard QFT circuit matches the dense oracle for n in [1,6]") {
  for (int n = 1; n <= 6; ++n)
    CHECK(max_abs_diff(standard_qft_unitary(n), dft_matrix(n)) <= 1e-10);
}

TEST_CASE("controlled-phase count is n(n-1)/2") {
  for (int n = 1; n <= 10; ++n) {
    auto ledger = count_gates(build_standard_qft(n));
    CHECK(ledger.two_qubit == n * (n - 1) / 2);
    CHECK(ledger.single_qubit == n);
  }
}

TEST_CASE("n=1 circuit is a single Hadamard") {
  Circuit c = build_standard_qft(1);
  REQUIRE(c.ops.size() == 1);
  CHECK(std::get<SingleQubitOp>(c.ops[0]).gate.name == "h");
}

TEST_CASE("approximate QFT drops large-k rotations") {
  auto full = count_gates(build_standard_qft(6));
  auto approx = count_gates(build_standard_qft(6, 3));
  CHECK(approx.two_qubit < full.two_qubit);
  CHECK(approx.single_qubit == full.single_qubit);
}

TEST_CASE("lowering: Fig.7-style n=3 circuit needs 6 CX") {
  Circuit lowered = lower_to_hardware_gates(build_standard_qft_measured(3));
  CHECK(count_gates(lowered).two_qubit == 6);
}

TEST_CASE("lowering preserves the unitary") {
  for (int n = 1; n <= 4; ++n) {
    Circuit c = build_standard_qft(n);
    CHECK(max_abs_diff(circuit_unitary(lower_to_hardware_gates(c)), circuit_unitary(c)) <=
          1e-10);
  }
}

TEST_CASE("lowering preserves measurement statistics on random inputs") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);  // n <= 5
    Circuit c = build_standard_qft_measured(n);
    Circuit lowered = lower_to_hardware_gates(c);
    StateVector s(n);
    for (Eigen::Index i = 0; i < s.amps.size(); ++i) s.amps(i) = complexd(g(rng), g(rng));
    s.amps.normalize();
    CHECK(total_variation(enumerate_branches(c, s), enumerate_branches(lowered, s)) <= 1e-9);
  }
}

TEST_CASE("count_gates on an empty circuit") {
  Circuit c;
  auto l = count_gates(c);
  CHECK(l.single_qubit == 0);
  CHECK(l.two_qubit == 0);
  CHECK(l.measurements == 0);
}

TEST_CASE("swap-based bit-order correction cost") {
  CHECK(swap_correction_cx(3) == 3);
  CHECK(swap_correction_cx(8) == 12);
}
