#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sqft/dyadic.hpp"
#include "sqft/gates.hpp"

namespace sqft {

struct SingleQubitOp {
  Gate1 gate;
  int target;
};

struct CxOp {
  int control;
  int target;
};

/// Quantum controlled phase: diag(1,1,1,e^{2 pi i phase}) on (control, target).
struct ControlledPhaseOp {
  int control;
  int target;
  Dyadic phase;  // cycles
};

struct MeasureOp {
  int qubit;
  int cbit;
};

/// Classically conditioned phase: applies diag(1, e^{2 pi i phase}) to
/// the target when classical bit `cbit` equals `value`.
struct ConditionedPhaseOp {
  int cbit;
  int value = 1;
  Dyadic phase;  // cycles
  int target;
};

struct ResetOp {
  int target;
};

/// Controlled basis-state permutation over a contiguous work register;
/// carrier of the modular-multiplication oracles.
struct ControlledPermutationOp {
  int control;
  std::vector<int> targets;           // target qubits, low significance first
  std::vector<std::uint32_t> perm;    // perm[y] = image of basis value y
};

using GateOp = std::variant<SingleQubitOp, CxOp, ControlledPhaseOp, MeasureOp,
                            ConditionedPhaseOp, ResetOp, ControlledPermutationOp>;

/// Qubit j carries bit weight 2^j in basis-state labels, everywhere.
struct Circuit {
  int num_qubits = 0;
  int num_clbits = 0;
  std::vector<GateOp> ops;
  /// Output relabeling: bit j of the reported outcome c reads classical
  /// bit output_map[j]. Holds the bit-order corrections that would
  /// otherwise cost SWAP gates.
  std::vector<int> output_map;

  void add(GateOp op) { ops.push_back(std::move(op)); }
  void append(const Circuit& fragment);

  /// Default identity map over all classical bits.
  std::vector<int> effective_output_map() const;

  /// Checks index ranges, unitarity of single-qubit matrices, and that
  /// every conditioned phase reads a classical bit measured earlier.
  void validate() const;

  int measure_count() const;
};

/// Fig.-2-style controlled-U fragment: C, CX, B, CX, A on the target and
/// U1(alpha) on the control. Exactly controlled-U (no residual global
/// phase) when the decomposition invariants hold.
Circuit controlled_gate_circuit(const ControlledDecomposition& dec, int control, int target);

}  // namespace sqft
