#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <random>

#include "sqft/circuit.hpp"

namespace sqft {

/// 2^width complex amplitudes, unit norm. Qubit j carries weight 2^j.
struct StateVector {
  int width = 0;
  Eigen::VectorXcd amps;

  StateVector() = default;
  explicit StateVector(int qubits);
  static StateVector basis(int qubits, std::uint64_t value);

  std::uint64_t dim() const { return 1ull << width; }
  double norm_sq() const { return amps.squaredNorm(); }
};

struct OutcomeDistribution {
  int bits = 0;
  std::map<std::uint64_t, double> p;

  double total() const;
  double prob(std::uint64_t c) const;
};

double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b);

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBranchCap = 1ull << 20;

/// Classical register during a run; -1 marks an unassigned bit.
using ClassicalBits = std::vector<int>;

/// Applies one op in place. Measure/Reset pick the outcome with `rng`
/// (sampling mode); `classical` receives measured bits and feeds
/// conditioned phases.
void apply(StateVector& state, const GateOp& op, ClassicalBits& classical, std::mt19937_64& rng);

/// Exact Born-rule branch tree walk: both outcomes at every Measure,
/// weighted; no randomness. Throws CapacityError past `branch_cap`
/// measured bits.
OutcomeDistribution enumerate_branches(const Circuit& circuit, const StateVector& input,
                                       std::uint64_t branch_cap = kDefaultBranchCap);

/// Shot-based run; reproducible per seed. Returned probabilities are
/// empirical frequencies.
OutcomeDistribution sample(const Circuit& circuit, const StateVector& input, std::uint64_t shots,
                           std::uint64_t seed);

/// Raw counts variant of `sample`.
std::map<std::uint64_t, std::uint64_t> sample_counts(const Circuit& circuit,
                                                     const StateVector& input,
                                                     std::uint64_t shots, std::uint64_t seed);

/// Dense unitary of a measurement-free circuit, built column by column.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

}  // namespace sqft
