#pragma once

#include <cstdint>
#include <vector>

#include "sqft/circuit.hpp"
#include "sqft/qft.hpp"
#include "sqft/simulator.hpp"

namespace sqft {

/// Partition of n input bits into one (n - l*t)-bit block followed by
/// l t-bit blocks, processed most-significant block first.
struct BlockPlan {
  int n = 0;
  int t = 0;
  int l = 0;
  std::vector<int> block_sizes;  // l + 1 entries, first in [1, t]

  int first_block_size() const { return block_sizes.front(); }
};

/// l = n/t - 1 when t divides n, floor(n/t) otherwise; the reading that
/// keeps the first block nonempty.
BlockPlan plan_blocks(int n, int t);

/// Feedback recurrence: first block phi = c'/2^{size+1}, then
/// phi_k = phi_{k-1}/2^t + c'/2^{t+1}. Exact dyadic arithmetic.
Dyadic phi_next(const Dyadic& phi_prev, std::uint64_t measured_block, int block_size,
                bool is_first);

/// One block step with a concrete feedback phase: S_k gates (S_1 on the
/// block's most significant qubit), the small QFT, and measurement of
/// every block qubit. Qubit/classical indices are block-local here
/// (0..size-1); block 0 takes phi = 0 and has no S_k gates.
Circuit build_block_step(const BlockPlan& plan, int block_index, const Dyadic& phi);

/// The full Fig.-1-style circuit on n qubits and n classical bits:
/// feedback S_k gates are expanded into per-measured-bit conditioned
/// phases, so the same circuit serves exact enumeration, sampling,
/// lowering, and emission. output_map carries the bit-order correction.
Circuit build_semiclassical_circuit(const BlockPlan& plan);

enum class RunMode { enumerate, sampled };

/// Executes the t-bit semiclassical transform on an arbitrary input
/// state. In enumerate mode the result equals |DFT psi|^2 exactly.
OutcomeDistribution run_semiclassical(const StateVector& input, const BlockPlan& plan,
                                      RunMode mode = RunMode::enumerate,
                                      std::uint64_t shots = 0, std::uint64_t seed = 0);

/// Replays the block kernels and feedback phases symbolically for one
/// (a, c) pair; the executable form of the distribution-equivalence
/// proof. Returns the accumulated amplitude, which must equal
/// omega_{2^n}^{ac} / 2^{n/2}.
complexd branch_phase(std::uint64_t a, std::uint64_t c, const BlockPlan& plan);

/// Closed-form resource ledger for recycled execution: peak width
/// t + extra_work_qubits, l+1 steps, block-local controlled-phase and
/// single-qubit counts (pre-lowering).
CountLedger recycled_execution_ledger(const BlockPlan& plan, int extra_work_qubits = 0);

}  // namespace sqft
