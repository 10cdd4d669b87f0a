#include "sqft/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sqft/semiclassical.hpp"

namespace sqft {

namespace {

const Matrix2cd& pauli(int idx) {
  static const Matrix2cd x = gate_x().m;
  static const Matrix2cd y = [] {
    Matrix2cd m;
    m << 0, complexd(0, -1), complexd(0, 1), 0;
    return m;
  }();
  static const Matrix2cd z = [] {
    Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
  }();
  static const Matrix2cd i = Matrix2cd::Identity();
  switch (idx) {
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: return i;
  }
}

Gate1 pauli_gate(int idx) {
  Gate1 g;
  g.name = idx == 1 ? "x" : (idx == 2 ? "y" : "z");
  g.m = pauli(idx);
  return g;
}

// One trajectory's circuit: the input with random Pauli insertions.
Circuit noisy_instance(const Circuit& circuit, const NoiseModel& noise, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  out.num_clbits = circuit.num_clbits;
  out.output_map = circuit.output_map;
  for (const auto& op : circuit.ops) {
    out.add(op);
    if (const auto* cx = std::get_if<CxOp>(&op)) {
      if (noise.two_qubit_depolarizing_p > 0 && coin(rng) < noise.two_qubit_depolarizing_p) {
        int e = std::uniform_int_distribution<int>(1, 15)(rng);  // non-identity pair
        int p1 = e & 3, p2 = e >> 2;
        if (p1) out.add(SingleQubitOp{pauli_gate(p1), cx->control});
        if (p2) out.add(SingleQubitOp{pauli_gate(p2), cx->target});
      }
    } else if (const auto* g = std::get_if<SingleQubitOp>(&op)) {
      if (noise.single_qubit_depolarizing_p > 0 &&
          coin(rng) < noise.single_qubit_depolarizing_p) {
        int p = std::uniform_int_distribution<int>(1, 3)(rng);
        out.add(SingleQubitOp{pauli_gate(p), g->target});
      }
    }
  }
  return out;
}

}  // namespace

double sso(const OutcomeDistribution& measured, const OutcomeDistribution& expected) {
  if (measured.bits != expected.bits)
    throw std::invalid_argument("sso: mismatched outcome spaces");
  double s = 0;
  for (const auto& [c, m] : measured.p) {
    double e = expected.prob(c);
    if (m > 0 && e > 0) s += std::sqrt(m * e);
  }
  // Cauchy-Schwarz bounds the sum by 1; clip floating-point overshoot
  return std::min(s * s, 1.0);
}

OutcomeDistribution run_noisy(const Circuit& circuit, const StateVector& input,
                              const NoiseModel& noise, std::uint64_t trajectories,
                              std::uint64_t seed) {
  if (trajectories < 1) throw std::invalid_argument("run_noisy: trajectories must be >= 1");
  std::mt19937_64 rng(seed);
  OutcomeDistribution acc;
  acc.bits = static_cast<int>(circuit.effective_output_map().size());
  for (std::uint64_t tr = 0; tr < trajectories; ++tr) {
    Circuit inst = noisy_instance(circuit, noise, rng);
    OutcomeDistribution d = enumerate_branches(inst, input);
    for (const auto& [c, p] : d.p) acc.p[c] += p;
  }
  for (auto& [c, p] : acc.p) p /= static_cast<double>(trajectories);
  return acc;
}

BatchedOverlap batched_overlap(const Circuit& lowered, const StateVector& input,
                               const OutcomeDistribution& ideal, const NoiseModel& noise,
                               std::uint64_t trajectories, std::uint64_t batches,
                               std::uint64_t seed) {
  if (batches < 2 || trajectories < batches)
    throw std::invalid_argument("batched_overlap: need >= 2 batches");
  std::uint64_t per_batch = trajectories / batches;
  std::vector<double> gammas;
  gammas.reserve(batches);
  std::mt19937_64 rng(seed);
  for (std::uint64_t b = 0; b < batches; ++b) {
    OutcomeDistribution acc;
    acc.bits = ideal.bits;
    for (std::uint64_t tr = 0; tr < per_batch; ++tr) {
      Circuit inst = noisy_instance(lowered, noise, rng);
      OutcomeDistribution d = enumerate_branches(inst, input);
      for (const auto& [c, p] : d.p) acc.p[c] += p;
    }
    for (auto& [c, p] : acc.p) p /= static_cast<double>(per_batch);
    gammas.push_back(sso(acc, ideal));
  }
  double mean = 0;
  for (double g : gammas) mean += g;
  mean /= static_cast<double>(gammas.size());
  double var = 0;
  for (double g : gammas) var += (g - mean) * (g - mean);
  var /= static_cast<double>(gammas.size() - 1);
  BatchedOverlap out;
  out.mean = mean;
  out.std_error = std::sqrt(var / static_cast<double>(gammas.size()));
  return out;
}

ComparisonReport compare_semiclassical_vs_standard(const NoiseModel& noise,
                                                   std::uint64_t trajectories,
                                                   std::uint64_t seed) {
  Circuit semi = lower_to_hardware_gates(build_semiclassical_circuit(plan_blocks(3, 2)));
  Circuit standard = lower_to_hardware_gates(build_standard_qft_measured(3));
  // The all-zeros input is useless here: its transform is uniform, and the
  // uniform distribution is a fixed point of Pauli noise in these circuits,
  // so both overlaps would sit at exactly 1. A period-2 superposition gives
  // an output with a deterministic bit that two-qubit errors can corrupt.
  StateVector input(3);
  input.amps.setZero();
  input.amps(0) = 1.0 / std::numbers::sqrt2;
  input.amps(4) = 1.0 / std::numbers::sqrt2;
  OutcomeDistribution ideal;
  ideal.bits = 3;
  for (std::uint64_t c = 0; c < 8; c += 2) ideal.p[c] = 0.25;

  const std::uint64_t batches = trajectories >= 1000 ? 100 : 2;
  BatchedOverlap a = batched_overlap(semi, input, ideal, noise, trajectories, batches, seed);
  BatchedOverlap b =
      batched_overlap(standard, input, ideal, noise, trajectories, batches, seed + 1);

  ComparisonReport r;
  r.gamma_semiclassical = a.mean;
  r.gamma_standard = b.mean;
  r.se_semiclassical = a.std_error;
  r.se_standard = b.std_error;
  r.trajectories = trajectories;
  r.noise = noise;
  r.cx_semiclassical = count_gates(semi).two_qubit;
  r.cx_standard = count_gates(standard).two_qubit;
  return r;
}

}  // namespace sqft
