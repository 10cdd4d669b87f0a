#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "sqft/semiclassical.hpp"

namespace sqft {

struct ShorConfig {
  std::uint64_t modulus = 0;  // N, odd composite
  std::uint64_t base = 0;     // x, coprime to N
  int exponent_bits = 0;      // n = 2*ceil(log2 N)
  int block_width = 1;        // t
  int work_qubits = 0;        // ceil(log2 N)

  static ShorConfig make(std::uint64_t n_value, std::uint64_t x, int t);
};

enum class ShorStatus { success, failure_zero, failure_bad_order, failure_trivial_gcd };

struct ShorOutcome {
  std::uint64_t c = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> convergent;  // (d, r)
  std::optional<std::uint64_t> order;
  std::set<std::uint64_t> factors;
  ShorStatus status = ShorStatus::failure_zero;
  int attempts_used = 0;
};

std::string to_string(ShorStatus s);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n);

/// Work-register permutation |y> -> |y * x^{2^k} mod N> for y < N,
/// identity above; the controlled modular-multiplication oracle.
std::vector<std::uint32_t> modexp_permutation(std::uint64_t x, std::uint64_t n, int exponent_bit);

/// Hand-compiled multiply-by-11 mod 15 on 4 work qubits; exact on the
/// reachable subspace {|1>, |11>} only.
Circuit compiled_mult11_mod15();

/// Recycled order-finding pipeline on t + work qubits: per exponent
/// block, Hadamards, controlled modular multiplications, feedback
/// phases, block QFT, measure, reset. use_compiled swaps in the
/// compiled multiplier for (N=15, x=11).
Circuit build_order_finding_circuit(const ShorConfig& cfg, bool use_compiled = false);

OutcomeDistribution run_order_finding(const ShorConfig& cfg, RunMode mode,
                                      std::uint64_t shots = 0, std::uint64_t seed = 0,
                                      bool use_compiled = false);

/// Smallest-denominator convergent d/r of c/2^n with r <= N and
/// |c/2^n - d/r| <= 1/2^{n+1}; nullopt for c = 0 or no qualifying
/// convergent.
std::optional<std::pair<std::uint64_t, std::uint64_t>> continued_fraction_order(
    std::uint64_t c, int n_bits, std::uint64_t modulus);

/// gcd(x^{r/2} +- 1, N) path with the full failure taxonomy.
ShorOutcome extract_factors(const ShorConfig& cfg, std::uint64_t r);

/// End-to-end: sample c, post-process, retry up to `attempts` times.
/// Each attempt takes the modal outcome of `shots` shots under a
/// per-attempt sub-seed. Never throws on failure; the outcome carries
/// the status.
ShorOutcome factor(const ShorConfig& cfg, std::uint64_t shots, std::uint64_t seed,
                   int attempts = 10);

}  // namespace sqft
