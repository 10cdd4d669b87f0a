#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "sqft/circuit.hpp"
#include "sqft/simulator.hpp"

namespace sqft {

/// Dense DFT matrix M[c][a] = omega_{2^n}^{ac} / 2^{n/2}; the ground
/// truth every circuit construction is checked against.
Eigen::MatrixXcd dft_matrix(int n);

StateVector dft_apply(const StateVector& state);
StateVector dft_apply_inverse(const StateVector& state);

struct CountLedger {
  std::int64_t single_qubit = 0;
  std::int64_t two_qubit = 0;
  std::int64_t measurements = 0;
  int peak_register_width = 0;
  int steps = 1;
};

/// Coppersmith circuit: n Hadamards and n(n-1)/2 controlled-R_k gates.
/// Output bits come out in reversed significance; callers correct by
/// classical relabeling (see output_reversal / build_standard_qft_measured),
/// not by SWAP gates. Controlled-R_k with k > max_k is dropped when
/// max_k > 0 (approximate QFT); default keeps all.
Circuit build_standard_qft(int n, int max_k = 0);

/// build_standard_qft plus Measure on every qubit, with the output map
/// already carrying the bit-order correction, so the reported outcome c
/// is distributed as |DFT psi|^2.
Circuit build_standard_qft_measured(int n, int max_k = 0);

std::uint64_t bit_reverse(std::uint64_t v, int n);

/// The standard-QFT unitary with the declared output convention applied
/// (row relabeling); equals dft_matrix(n).
Eigen::MatrixXcd standard_qft_unitary(int n);

/// Replaces every controlled-R_k by its two-CX fragment and every H by
/// U2(pi, 0). Conditioned phases are already hardware-expressible.
Circuit lower_to_hardware_gates(const Circuit& circuit);

CountLedger count_gates(const Circuit& circuit);

/// Two-qubit cost of correcting bit order with SWAPs instead of
/// relabeling (3 CX per SWAP, floor(n/2) swaps).
std::int64_t swap_correction_cx(int n);

}  // namespace sqft
