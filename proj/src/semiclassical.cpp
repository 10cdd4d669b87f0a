#include "sqft/semiclassical.hpp"

#include <cmath>
#include <stdexcept>

namespace sqft {

BlockPlan plan_blocks(int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("plan_blocks: need 1 <= t <= n");
  BlockPlan p;
  p.n = n;
  p.t = t;
  p.l = (n % t == 0) ? n / t - 1 : n / t;
  p.block_sizes.push_back(n - p.l * t);
  for (int j = 0; j < p.l; ++j) p.block_sizes.push_back(t);
  return p;
}

Dyadic phi_next(const Dyadic& phi_prev, std::uint64_t measured_block, int block_size,
                bool is_first) {
  if (measured_block >= (1ull << block_size))
    throw std::out_of_range("phi_next: measured block out of range");
  if (is_first) return Dyadic(measured_block, block_size + 1);
  return phi_prev.shifted(block_size) + Dyadic(measured_block, block_size + 1);
}

namespace {

// Global qubit index of a block's least significant bit. Block 0 holds
// input bits a_{n-1..lt}, block j holds a_{(l-j+1)t-1..(l-j)t}.
int block_base(const BlockPlan& p, int j) {
  return j == 0 ? p.l * p.t : (p.l - j) * p.t;
}

// Output position of the block's local output bit 0; block 0 fills the
// low bits of c, block j fills c_{n-(l-j+1)t ...}.
int block_out_base(const BlockPlan& p, int j) {
  return j == 0 ? 0 : p.n - (p.l - j + 1) * p.t;
}

void append_offset(Circuit& dst, const Circuit& src, int qubit_offset) {
  for (GateOp op : src.ops) {
    if (auto* g = std::get_if<SingleQubitOp>(&op)) g->target += qubit_offset;
    else if (auto* cx = std::get_if<CxOp>(&op)) { cx->control += qubit_offset; cx->target += qubit_offset; }
    else if (auto* cp = std::get_if<ControlledPhaseOp>(&op)) { cp->control += qubit_offset; cp->target += qubit_offset; }
    else throw std::invalid_argument("append_offset: unsupported op in fragment");
    dst.add(op);
  }
}

}  // namespace

Circuit build_block_step(const BlockPlan& plan, int block_index, const Dyadic& phi) {
  if (block_index < 0 || block_index > plan.l)
    throw std::out_of_range("build_block_step: block index out of range");
  if (block_index == 0 && !phi.is_zero())
    throw std::invalid_argument("build_block_step: block 0 takes phi = 0");
  const int b = plan.block_sizes[block_index];
  Circuit frag;
  frag.num_qubits = b;
  frag.num_clbits = b;
  if (block_index > 0 && !phi.is_zero()) {
    // S_k on the qubit of local weight 2^{t-k}
    for (int k = 1; k <= plan.t; ++k)
      frag.add(SingleQubitOp{s_k(k, phi), plan.t - k});
  }
  append_offset(frag, build_standard_qft(b), 0);
  for (int q = 0; q < b; ++q) frag.add(MeasureOp{q, q});
  return frag;
}

Circuit build_semiclassical_circuit(const BlockPlan& plan) {
  const int n = plan.n, t = plan.t, l = plan.l;
  Circuit c;
  c.num_qubits = n;
  c.num_clbits = n;
  c.output_map.assign(n, 0);
  // coeff[b] = dyadic weight of classical bit b in the running phi
  std::vector<Dyadic> coeff(n);
  for (int j = 0; j <= l; ++j) {
    const int b = plan.block_sizes[j];
    const int base = block_base(plan, j);
    if (j > 0) {
      for (int k = 1; k <= t; ++k) {
        const int target = base + t - k;
        for (int bit = 0; bit < n; ++bit)
          if (!coeff[bit].is_zero())
            c.add(ConditionedPhaseOp{bit, 1, coeff[bit].shifted(k - 1), target});
      }
    }
    append_offset(c, build_standard_qft(b), base);
    for (int m = 0; m < b; ++m) c.add(MeasureOp{base + m, base + m});
    // local output bit x lands on local qubit b-1-x
    const int out_base = block_out_base(plan, j);
    for (int x = 0; x < b; ++x) c.output_map[out_base + x] = base + b - 1 - x;
    // fold this block's measurement into the phi coefficients
    if (j < l) {
      if (j > 0)
        for (auto& w : coeff)
          if (!w.is_zero()) w = w.shifted(t);
      for (int x = 0; x < b; ++x) {
        // block value bit x has weight 2^x / 2^{b+1} in the next phi
        coeff[base + b - 1 - x] = coeff[base + b - 1 - x] + Dyadic(1, b + 1 - x);
      }
    }
  }
  return c;
}

OutcomeDistribution run_semiclassical(const StateVector& input, const BlockPlan& plan,
                                      RunMode mode, std::uint64_t shots, std::uint64_t seed) {
  if (input.width != plan.n)
    throw std::invalid_argument("run_semiclassical: input width mismatch");
  Circuit c = build_semiclassical_circuit(plan);
  if (mode == RunMode::enumerate) return enumerate_branches(c, input);
  return sample(c, input, shots, seed);
}

complexd branch_phase(std::uint64_t a, std::uint64_t c, const BlockPlan& plan) {
  const int n = plan.n, t = plan.t, l = plan.l;
  if (a >= (1ull << n) || c >= (1ull << n))
    throw std::out_of_range("branch_phase: value out of range");
  Dyadic total;
  Dyadic phi;
  std::uint64_t prev_block_c = 0;
  for (int j = 0; j <= l; ++j) {
    const int b = plan.block_sizes[j];
    const std::uint64_t a_j = (a >> block_base(plan, j)) & Dyadic::mask(b);
    const std::uint64_t c_j = (c >> block_out_base(plan, j)) & Dyadic::mask(b);
    if (j > 0) {
      phi = phi_next(phi, prev_block_c, plan.block_sizes[j - 1], j == 1);
      // feedback contributes a'_j * phi / 2^{t-1}
      total = total + phi.shifted(t - 1).times(a_j);
    }
    total = total + Dyadic((a_j * c_j) & Dyadic::mask(b), b);
    prev_block_c = c_j;
  }
  const double scale = std::pow(2.0, -0.5 * n);
  return scale * std::exp(complexd(0, total.radians()));
}

CountLedger recycled_execution_ledger(const BlockPlan& plan, int extra_work_qubits) {
  CountLedger ledger;
  const int b0 = plan.first_block_size();
  ledger.two_qubit = static_cast<std::int64_t>(plan.l) * plan.t * (plan.t - 1) / 2 +
                     static_cast<std::int64_t>(b0) * (b0 - 1) / 2;
  ledger.single_qubit = plan.n + static_cast<std::int64_t>(plan.l) * plan.t;
  ledger.measurements = plan.n;
  ledger.peak_register_width = plan.t + extra_work_qubits;
  ledger.steps = plan.l + 1;
  return ledger;
}

}  // namespace sqft
