#include "sqft/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace sqft {

StateVector::StateVector(int qubits) : width(qubits) {
  if (qubits < 0 || qubits > 26) throw std::invalid_argument("state width out of range");
  amps = Eigen::VectorXcd::Zero(1ll << qubits);
  amps(0) = 1.0;
}

StateVector StateVector::basis(int qubits, std::uint64_t value) {
  StateVector s(qubits);
  if (value >= s.dim()) throw std::out_of_range("basis value out of range");
  s.amps(0) = 0.0;
  s.amps(static_cast<Eigen::Index>(value)) = 1.0;
  return s;
}

double OutcomeDistribution::total() const {
  double t = 0;
  for (const auto& [c, v] : p) t += v;
  return t;
}

double OutcomeDistribution::prob(std::uint64_t c) const {
  auto it = p.find(c);
  return it == p.end() ? 0.0 : it->second;
}

double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  double d = 0;
  for (const auto& [c, v] : a.p) d += std::abs(v - b.prob(c));
  for (const auto& [c, v] : b.p)
    if (!a.p.count(c)) d += v;
  return d / 2;
}

namespace {

void apply_gate1(StateVector& s, const Matrix2cd& m, int target) {
  const std::uint64_t bit = 1ull << target;
  auto& a = s.amps;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    if (i & bit) continue;
    complexd a0 = a(i), a1 = a(i | bit);
    a(i) = m(0, 0) * a0 + m(0, 1) * a1;
    a(i | bit) = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_cx(StateVector& s, int control, int target) {
  const std::uint64_t cb = 1ull << control, tb = 1ull << target;
  auto& a = s.amps;
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    if ((i & cb) && !(i & tb)) std::swap(a(i), a(i | tb));
}

void apply_phase_on(StateVector& s, std::uint64_t match_mask, std::uint64_t match_val,
                    const Dyadic& phase) {
  complexd ph = std::exp(complexd(0, phase.radians()));
  auto& a = s.amps;
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    if ((i & match_mask) == match_val) a(i) *= ph;
}

void apply_cperm(StateVector& s, const ControlledPermutationOp& op) {
  const std::uint64_t cb = 1ull << op.control;
  const std::uint64_t nt = op.targets.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amps.size());
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    std::uint64_t j = i;
    if (i & cb) {
      std::uint64_t y = 0;
      for (std::uint64_t b = 0; b < nt; ++b)
        if (i & (1ull << op.targets[b])) y |= 1ull << b;
      std::uint64_t z = op.perm[y];
      for (std::uint64_t b = 0; b < nt; ++b) {
        std::uint64_t tb = 1ull << op.targets[b];
        j = (z & (1ull << b)) ? (j | tb) : (j & ~tb);
      }
    }
    out(j) += s.amps(i);
  }
  s.amps = std::move(out);
}

double prob_of_bit(const StateVector& s, int qubit, int value) {
  const std::uint64_t bit = 1ull << qubit;
  double p = 0;
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    if (((i & bit) != 0) == (value != 0)) p += std::norm(s.amps(i));
  return p;
}

void project(StateVector& s, int qubit, int value, double p) {
  const std::uint64_t bit = 1ull << qubit;
  double scale = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    if (((i & bit) != 0) == (value != 0))
      s.amps(i) *= scale;
    else
      s.amps(i) = 0.0;
  }
}

std::uint64_t assemble_outcome(const ClassicalBits& classical, const std::vector<int>& map) {
  std::uint64_t c = 0;
  for (size_t j = 0; j < map.size(); ++j)
    if (classical[map[j]] == 1) c |= 1ull << j;
  return c;
}

struct Enumerator {
  const Circuit& circuit;
  std::vector<int> out_map;
  std::uint64_t branch_cap;
  std::uint64_t branches_opened = 0;
  OutcomeDistribution dist;

  void walk(StateVector state, ClassicalBits classical, double weight, size_t op_index) {
    std::mt19937_64 no_rng;  // unused on unitary ops
    for (size_t i = op_index; i < circuit.ops.size(); ++i) {
      const GateOp& op = circuit.ops[i];
      if (const auto* m = std::get_if<MeasureOp>(&op)) {
        double p1 = prob_of_bit(state, m->qubit, 1);
        double p0 = 1.0 - p1;
        constexpr double eps = 1e-14;
        if (p0 > eps && p1 > eps) {
          if (++branches_opened > branch_cap)
            throw CapacityError("branch enumeration exceeded cap");
          StateVector s1 = state;
          ClassicalBits c1 = classical;
          project(s1, m->qubit, 1, p1);
          c1[m->cbit] = 1;
          walk(std::move(s1), std::move(c1), weight * p1, i + 1);
          project(state, m->qubit, 0, p0);
          classical[m->cbit] = 0;
          weight *= p0;
        } else {
          int v = p1 > eps ? 1 : 0;
          project(state, m->qubit, v, v ? p1 : p0);
          classical[m->cbit] = v;
          weight *= v ? p1 : p0;
        }
      } else if (const auto* r = std::get_if<ResetOp>(&op)) {
        double p1 = prob_of_bit(state, r->target, 1);
        double p0 = 1.0 - p1;
        constexpr double eps = 1e-14;
        if (p0 > eps && p1 > eps) {
          if (++branches_opened > branch_cap)
            throw CapacityError("branch enumeration exceeded cap");
          StateVector s1 = state;
          project(s1, r->target, 1, p1);
          apply_gate1(s1, gate_x().m, r->target);
          walk(std::move(s1), classical, weight * p1, i + 1);
          project(state, r->target, 0, p0);
          weight *= p0;
        } else if (p1 > eps) {
          project(state, r->target, 1, p1);
          apply_gate1(state, gate_x().m, r->target);
          weight *= p1;
        } else {
          project(state, r->target, 0, p0);
          weight *= p0;
        }
      } else {
        apply(state, op, classical, no_rng);
      }
    }
    dist.p[assemble_outcome(classical, out_map)] += weight;
  }
};

}  // namespace

void apply(StateVector& state, const GateOp& op, ClassicalBits& classical, std::mt19937_64& rng) {
  if (const auto* g = std::get_if<SingleQubitOp>(&op)) {
    if (g->target >= state.width) throw std::out_of_range("gate target out of range");
    apply_gate1(state, g->gate.m, g->target);
  } else if (const auto* cx = std::get_if<CxOp>(&op)) {
    if (cx->control >= state.width || cx->target >= state.width)
      throw std::out_of_range("cx index out of range");
    apply_cx(state, cx->control, cx->target);
  } else if (const auto* cp = std::get_if<ControlledPhaseOp>(&op)) {
    std::uint64_t mask = (1ull << cp->control) | (1ull << cp->target);
    apply_phase_on(state, mask, mask, cp->phase);
  } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
    double p1 = prob_of_bit(state, m->qubit, 1);
    int v = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p1 ? 1 : 0;
    project(state, m->qubit, v, v ? p1 : 1.0 - p1);
    classical[m->cbit] = v;
  } else if (const auto* f = std::get_if<ConditionedPhaseOp>(&op)) {
    if (classical[f->cbit] < 0)
      throw std::logic_error("conditioned phase reads unassigned classical bit");
    if (classical[f->cbit] == f->value)
      apply_phase_on(state, 1ull << f->target, 1ull << f->target, f->phase);
  } else if (const auto* r = std::get_if<ResetOp>(&op)) {
    double p1 = prob_of_bit(state, r->target, 1);
    int v = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p1 ? 1 : 0;
    project(state, r->target, v, v ? p1 : 1.0 - p1);
    if (v) apply_gate1(state, gate_x().m, r->target);
  } else if (const auto* p = std::get_if<ControlledPermutationOp>(&op)) {
    apply_cperm(state, *p);
  }
}

OutcomeDistribution enumerate_branches(const Circuit& circuit, const StateVector& input,
                                       std::uint64_t branch_cap) {
  if (input.width != circuit.num_qubits)
    throw std::invalid_argument("enumerate_branches: input width mismatch");
  if (circuit.measure_count() > 0 &&
      (1ull << std::min(circuit.measure_count(), 63)) > branch_cap)
    throw CapacityError("branch count 2^measures exceeds cap");
  Enumerator e{circuit, circuit.effective_output_map(), branch_cap};
  e.dist.bits = static_cast<int>(e.out_map.size());
  e.walk(input, ClassicalBits(circuit.num_clbits, -1), 1.0, 0);
  return e.dist;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const Circuit& circuit,
                                                     const StateVector& input,
                                                     std::uint64_t shots, std::uint64_t seed) {
  if (input.width != circuit.num_qubits)
    throw std::invalid_argument("sample: input width mismatch");
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  std::vector<int> out_map = circuit.effective_output_map();
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    StateVector state = input;
    ClassicalBits classical(circuit.num_clbits, -1);
    for (const auto& op : circuit.ops) apply(state, op, classical, rng);
    counts[assemble_outcome(classical, out_map)] += 1;
  }
  return counts;
}

OutcomeDistribution sample(const Circuit& circuit, const StateVector& input, std::uint64_t shots,
                           std::uint64_t seed) {
  OutcomeDistribution d;
  d.bits = static_cast<int>(circuit.effective_output_map().size());
  for (const auto& [c, n] : sample_counts(circuit, input, shots, seed))
    d.p[c] = static_cast<double>(n) / static_cast<double>(shots);
  return d;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  for (const auto& op : circuit.ops)
    if (std::holds_alternative<MeasureOp>(op) || std::holds_alternative<ResetOp>(op) ||
        std::holds_alternative<ConditionedPhaseOp>(op))
      throw std::invalid_argument("circuit_unitary: circuit is not purely unitary");
  const std::uint64_t dim = 1ull << circuit.num_qubits;
  Eigen::MatrixXcd u(dim, dim);
  ClassicalBits none;
  std::mt19937_64 rng;
  for (std::uint64_t a = 0; a < dim; ++a) {
    StateVector s = StateVector::basis(circuit.num_qubits, a);
    for (const auto& op : circuit.ops) apply(s, op, none, rng);
    u.col(static_cast<Eigen::Index>(a)) = s.amps;
  }
  return u;
}

}  // namespace sqft
