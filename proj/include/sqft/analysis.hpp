#pragma once

#include <cstdint>

#include "sqft/qft.hpp"
#include "sqft/simulator.hpp"

namespace sqft {

struct NoiseModel {
  double two_qubit_depolarizing_p = 0.0;
  double single_qubit_depolarizing_p = 0.0;
};

/// Squared statistical overlap (sum_y sqrt(m_y e_y))^2, the squared
/// Bhattacharyya coefficient.
double sso(const OutcomeDistribution& measured, const OutcomeDistribution& expected);

/// Monte-Carlo Pauli trajectories: with probability p a uniformly random
/// non-identity Pauli (pair) is inserted after each gate. Each
/// trajectory's measurement statistics are enumerated exactly, so the
/// trajectory count is the only sampling axis.
OutcomeDistribution run_noisy(const Circuit& circuit, const StateVector& input,
                              const NoiseModel& noise, std::uint64_t trajectories,
                              std::uint64_t seed);

struct ComparisonReport {
  double gamma_semiclassical = 0.0;
  double gamma_standard = 0.0;
  double se_semiclassical = 0.0;  // Monte-Carlo standard error (batch means)
  double se_standard = 0.0;
  std::uint64_t trajectories = 0;
  NoiseModel noise;
  std::int64_t cx_semiclassical = 0;
  std::int64_t cx_standard = 0;
};

/// Runs the lowered 2-bit semiclassical and standard QFT circuits over
/// Z_8 on |000> under the same noise and compares their overlap with the
/// ideal uniform distribution.
ComparisonReport compare_semiclassical_vs_standard(const NoiseModel& noise,
                                                   std::uint64_t trajectories,
                                                   std::uint64_t seed);

/// Mean and standard error of per-batch overlap values; backs the
/// comparison margins.
struct BatchedOverlap {
  double mean = 0.0;
  double std_error = 0.0;
};

BatchedOverlap batched_overlap(const Circuit& lowered, const StateVector& input,
                               const OutcomeDistribution& ideal, const NoiseModel& noise,
                               std::uint64_t trajectories, std::uint64_t batches,
                               std::uint64_t seed);

}  // namespace sqft
