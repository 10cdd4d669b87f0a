#include "sqft/qft.hpp"

#include <cmath>
#include <stdexcept>

namespace sqft {

Eigen::MatrixXcd dft_matrix(int n) {
  if (n < 1 || n > 13) throw std::invalid_argument("dft_matrix: n out of range");
  const std::uint64_t dim = 1ull << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Eigen::MatrixXcd m(dim, dim);
  for (std::uint64_t c = 0; c < dim; ++c)
    for (std::uint64_t a = 0; a < dim; ++a) {
      double phase = 2.0 * std::numbers::pi * static_cast<double>((a * c) % dim) /
                     static_cast<double>(dim);
      m(c, a) = scale * std::exp(complexd(0, phase));
    }
  return m;
}

StateVector dft_apply(const StateVector& state) {
  StateVector out = state;
  out.amps = dft_matrix(state.width) * state.amps;
  return out;
}

StateVector dft_apply_inverse(const StateVector& state) {
  StateVector out = state;
  out.amps = dft_matrix(state.width).adjoint() * state.amps;
  return out;
}

Circuit build_standard_qft(int n, int max_k) {
  if (n < 1) throw std::invalid_argument("build_standard_qft: n must be >= 1");
  if (n > 30) throw std::invalid_argument("build_standard_qft: n too large");
  Circuit c;
  c.num_qubits = n;
  // After the sweep, qubit m holds output bit n-1-m.
  for (int m = n - 1; m >= 0; --m) {
    c.add(SingleQubitOp{gate_h(), m});
    for (int k = 2; k <= m + 1; ++k) {
      if (max_k > 0 && k > max_k) continue;
      c.add(ControlledPhaseOp{m - k + 1, m, Dyadic(1, k)});
    }
  }
  return c;
}

Circuit build_standard_qft_measured(int n, int max_k) {
  Circuit c = build_standard_qft(n, max_k);
  c.num_clbits = n;
  c.output_map.resize(n);
  for (int q = 0; q < n; ++q) {
    c.add(MeasureOp{q, q});
    c.output_map[n - 1 - q] = q;  // qubit q holds output bit n-1-q
  }
  return c;
}

std::uint64_t bit_reverse(std::uint64_t v, int n) {
  std::uint64_t r = 0;
  for (int j = 0; j < n; ++j)
    if (v & (1ull << j)) r |= 1ull << (n - 1 - j);
  return r;
}

Eigen::MatrixXcd standard_qft_unitary(int n) {
  Eigen::MatrixXcd raw = circuit_unitary(build_standard_qft(n));
  const std::uint64_t dim = 1ull << n;
  Eigen::MatrixXcd out(dim, dim);
  for (std::uint64_t c = 0; c < dim; ++c) out.row(c) = raw.row(bit_reverse(c, n));
  return out;
}

Circuit lower_to_hardware_gates(const Circuit& circuit) {
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  out.num_clbits = circuit.num_clbits;
  out.output_map = circuit.output_map;
  for (const auto& op : circuit.ops) {
    if (const auto* g = std::get_if<SingleQubitOp>(&op)) {
      if (g->gate.name == "h") {
        out.add(SingleQubitOp{gate_u2(PiAngle::pi_frac(1, 0), PiAngle::zero()), g->target});
      } else {
        out.add(op);
      }
    } else if (const auto* cp = std::get_if<ControlledPhaseOp>(&op)) {
      Dyadic p = cp->phase;
      if (p.exp < 1) throw std::invalid_argument("lower: controlled phase must be a proper fraction");
      Gate1 u = s_k(1, p);  // diag(1, e^{2 pi i p})
      out.append(controlled_gate_circuit(decompose_phase_gate(u), cp->control, cp->target));
    } else if (std::holds_alternative<ControlledPermutationOp>(op)) {
      throw std::invalid_argument("lower: controlled permutation has no hardware form");
    } else {
      out.add(op);
    }
  }
  return out;
}

CountLedger count_gates(const Circuit& circuit) {
  CountLedger l;
  l.peak_register_width = circuit.num_qubits;
  for (const auto& op : circuit.ops) {
    if (std::holds_alternative<SingleQubitOp>(op) ||
        std::holds_alternative<ConditionedPhaseOp>(op))
      ++l.single_qubit;
    else if (std::holds_alternative<CxOp>(op) || std::holds_alternative<ControlledPhaseOp>(op))
      ++l.two_qubit;
    else if (std::holds_alternative<MeasureOp>(op))
      ++l.measurements;
    else if (std::holds_alternative<ControlledPermutationOp>(op))
      ++l.two_qubit;  // counted as one multi-qubit op
  }
  return l;
}

std::int64_t swap_correction_cx(int n) { return 3ll * (n / 2); }

}  // namespace sqft
