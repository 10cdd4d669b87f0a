#include "sqft/circuit.hpp"

#include <stdexcept>

namespace sqft {

void Circuit::append(const Circuit& fragment) {
  for (const auto& op : fragment.ops) ops.push_back(op);
}

std::vector<int> Circuit::effective_output_map() const {
  if (!output_map.empty()) return output_map;
  std::vector<int> m(num_clbits);
  for (int j = 0; j < num_clbits; ++j) m[j] = j;
  return m;
}

int Circuit::measure_count() const {
  int n = 0;
  for (const auto& op : ops)
    if (std::holds_alternative<MeasureOp>(op)) ++n;
  return n;
}

void Circuit::validate() const {
  auto check_q = [&](int q) {
    if (q < 0 || q >= num_qubits) throw std::out_of_range("circuit: qubit index out of range");
  };
  auto check_c = [&](int c) {
    if (c < 0 || c >= num_clbits) throw std::out_of_range("circuit: classical bit index out of range");
  };
  std::vector<bool> written(num_clbits, false);
  for (const auto& op : ops) {
    if (auto* g = std::get_if<SingleQubitOp>(&op)) {
      check_q(g->target);
      if (!is_unitary(g->gate.m)) throw std::invalid_argument("circuit: non-unitary single-qubit gate");
    } else if (auto* cx = std::get_if<CxOp>(&op)) {
      check_q(cx->control);
      check_q(cx->target);
      if (cx->control == cx->target) throw std::invalid_argument("circuit: cx control equals target");
    } else if (auto* cp = std::get_if<ControlledPhaseOp>(&op)) {
      check_q(cp->control);
      check_q(cp->target);
      if (cp->control == cp->target) throw std::invalid_argument("circuit: cp control equals target");
    } else if (auto* m = std::get_if<MeasureOp>(&op)) {
      check_q(m->qubit);
      check_c(m->cbit);
      written[m->cbit] = true;
    } else if (auto* f = std::get_if<ConditionedPhaseOp>(&op)) {
      check_q(f->target);
      check_c(f->cbit);
      if (!written[f->cbit])
        throw std::invalid_argument("circuit: conditioned phase reads an unmeasured classical bit");
    } else if (auto* r = std::get_if<ResetOp>(&op)) {
      check_q(r->target);
    } else if (auto* p = std::get_if<ControlledPermutationOp>(&op)) {
      check_q(p->control);
      for (int t : p->targets) check_q(t);
      if (p->perm.size() != (1ull << p->targets.size()))
        throw std::invalid_argument("circuit: permutation size mismatch");
    }
  }
  for (int b : output_map) check_c(b);
}

Circuit controlled_gate_circuit(const ControlledDecomposition& dec, int control, int target) {
  if (control == target) throw std::invalid_argument("controlled_gate_circuit: control equals target");
  Circuit frag;
  frag.num_qubits = std::max(control, target) + 1;
  frag.add(SingleQubitOp{dec.c, target});
  frag.add(CxOp{control, target});
  frag.add(SingleQubitOp{dec.b, target});
  frag.add(CxOp{control, target});
  frag.add(SingleQubitOp{dec.a, target});
  frag.add(SingleQubitOp{gate_u1(dec.alpha), control});
  return frag;
}

}  // namespace sqft
