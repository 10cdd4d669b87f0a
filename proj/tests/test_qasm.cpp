#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "sqft/qasm.hpp"
#include "sqft/semiclassical.hpp"
#include "sqft/shor.hpp"

using namespace sqft;

namespace {

StateVector random_state(int n, std::mt19937_64& rng) {
  StateVector s(n);
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < s.amps.size(); ++i) s.amps(i) = complexd(g(rng), g(rng));
  s.amps.normalize();
  return s;
}

void check_roundtrip(const Circuit& lowered, const StateVector& input) {
  Circuit parsed = parse_qasm(emit_qasm(lowered));
  CHECK(parsed.num_qubits == lowered.num_qubits);
  auto before = enumerate_branches(lowered, input);
  auto after = enumerate_branches(parsed, input);
  CHECK(total_variation(before, after) <= 1e-9);
}

}  // namespace

TEST_CASE("controlled-R_4 fragment emits 2 cx and 4 u1 lines") {
  Circuit frag = controlled_gate_circuit(decompose_phase_gate(r_k(4)), 0, 1);
  std::string text = emit_qasm(frag);
  int cx = 0, u1 = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("cx ", 0) == 0) ++cx;
    if (line.rfind("u1(", 0) == 0) ++u1;
  }
  CHECK(cx == 2);
  CHECK(u1 == 4);
  CHECK(text.find("u1(pi/32)") != std::string::npos);
  CHECK(text.find("u1(-pi/16)") != std::string::npos);
}

TEST_CASE("semiclassical n=3 emission carries per-bit cregs and conditionals") {
  Circuit fig5 = lower_to_hardware_gates(build_semiclassical_circuit(plan_blocks(3, 2)));
  std::string text = emit_qasm(fig5);
  int cx = 0, cond = 0, creg = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("cx ", 0) == 0) ++cx;
    if (line.rfind("if(", 0) == 0) ++cond;
    if (line.rfind("creg ", 0) == 0) ++creg;
  }
  CHECK(cx == 2);
  CHECK(cond >= 1);
  CHECK(creg == 3);
}

TEST_CASE("empty circuit emits a header-only file") {
  Circuit c;
  std::string text = emit_qasm(c);
  CHECK(text == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[0];\n");
}

TEST_CASE("emission is byte-stable") {
  Circuit fig5 = lower_to_hardware_gates(build_semiclassical_circuit(plan_blocks(4, 2)));
  CHECK(emit_qasm(fig5) == emit_qasm(fig5));
}

TEST_CASE("emission rejects un-lowered circuits") {
  CHECK_THROWS(emit_qasm(build_standard_qft(3)));  // has controlled-phase ops
}

TEST_CASE("round-trip over every builder output") {
  std::mt19937_64 rng(19);
  for (int n = 1; n <= 5; ++n) {
    StateVector input = random_state(n, rng);
    check_roundtrip(lower_to_hardware_gates(build_standard_qft_measured(n)), input);
    for (int t = 1; t <= n; ++t)
      check_roundtrip(lower_to_hardware_gates(build_semiclassical_circuit(plan_blocks(n, t))),
                      input);
  }
}

TEST_CASE("round-trip of the compiled Shor circuit") {
  ShorConfig cfg = ShorConfig::make(15, 11, 2);
  Circuit c = lower_to_hardware_gates(build_order_finding_circuit(cfg, true));
  check_roundtrip(c, StateVector(c.num_qubits));
}

TEST_CASE("unsupported instruction names the offender") {
  std::string text =
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\nccx q[0],q[1],q[2];\n";
  CHECK_THROWS_WITH_AS(parse_qasm(text), doctest::Contains("ccx"), QasmParseError);
}

TEST_CASE("comments and whitespace perturbation parse identically") {
  Circuit fig5 = lower_to_hardware_gates(build_semiclassical_circuit(plan_blocks(3, 2)));
  std::string text = emit_qasm(fig5);
  std::string noisy;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    noisy += "  " + line + "   // trailing note\n\n";
  }
  Circuit a = parse_qasm(text);
  Circuit b = parse_qasm(noisy);
  StateVector input(3);
  CHECK(total_variation(enumerate_branches(a, input), enumerate_branches(b, input)) <= 1e-12);
  CHECK(a.ops.size() == b.ops.size());
}

TEST_CASE("file round trip") {
  Circuit fig5 = lower_to_hardware_gates(build_semiclassical_circuit(plan_blocks(3, 2)));
  std::string path = "fig5_roundtrip.qasm";
  emit_qasm_file(fig5, path);
  Circuit parsed = parse_qasm_file(path);
  StateVector input(3);
  CHECK(total_variation(enumerate_branches(fig5, input), enumerate_branches(parsed, input)) <=
        1e-9);
  std::remove(path.c_str());
}
