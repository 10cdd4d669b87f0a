#include "sqft/shor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqft {

namespace {

int ceil_log2(std::uint64_t v) {
  int b = 0;
  while ((1ull << b) < v) ++b;
  return b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n) {
  if (std::gcd(x, n) != 1) throw std::invalid_argument("order: gcd(x, N) != 1");
  std::uint64_t y = x % n;
  std::uint64_t r = 1;
  while (y != 1) {
    y = (y * (x % n)) % n;
    ++r;
    if (r > n) throw std::logic_error("order: no order found");
  }
  return r;
}

ShorConfig ShorConfig::make(std::uint64_t n_value, std::uint64_t x, int t) {
  if (n_value < 3 || n_value % 2 == 0)
    throw std::invalid_argument("shor: N must be an odd integer >= 3");
  if (is_prime(n_value)) throw std::invalid_argument("shor: N is prime");
  if (is_prime_power(n_value))
    throw std::invalid_argument("shor: N is a prime power; classical methods apply");
  if (x < 2 || x >= n_value) throw std::invalid_argument("shor: need 1 < x < N");
  if (std::gcd(x, n_value) != 1)
    throw std::invalid_argument("shor: gcd(x, N) != 1; the gcd is already a factor");
  ShorConfig cfg;
  cfg.modulus = n_value;
  cfg.base = x;
  cfg.work_qubits = ceil_log2(n_value);
  cfg.exponent_bits = 2 * cfg.work_qubits;
  if (t < 1 || t > cfg.exponent_bits)
    throw std::invalid_argument("shor: block width t out of range");
  cfg.block_width = t;
  return cfg;
}

std::string to_string(ShorStatus s) {
  switch (s) {
    case ShorStatus::success: return "success";
    case ShorStatus::failure_zero: return "failure-zero";
    case ShorStatus::failure_bad_order: return "failure-bad-order";
    case ShorStatus::failure_trivial_gcd: return "failure-trivial-gcd";
  }
  return "unknown";
}

std::vector<std::uint32_t> modexp_permutation(std::uint64_t x, std::uint64_t n, int exponent_bit) {
  if (std::gcd(x, n) != 1) throw std::invalid_argument("modexp: gcd(x, N) != 1");
  const int w = ceil_log2(n);
  const std::uint64_t dim = 1ull << w;
  const std::uint64_t mult = pow_mod(x, 1ull << exponent_bit, n);
  std::vector<std::uint32_t> perm(dim);
  for (std::uint64_t y = 0; y < dim; ++y)
    perm[y] = static_cast<std::uint32_t>(y < n ? (y * mult) % n : y);
  return perm;
}

Circuit compiled_mult11_mod15() {
  // 1 = 0001 <-> 11 = 1011: flip work bits 1 and 3
  Circuit frag;
  frag.num_qubits = 4;
  frag.add(SingleQubitOp{gate_x(), 1});
  frag.add(SingleQubitOp{gate_x(), 3});
  return frag;
}

Circuit build_order_finding_circuit(const ShorConfig& cfg, bool use_compiled) {
  const int n = cfg.exponent_bits, t = cfg.block_width, w = cfg.work_qubits;
  if (use_compiled && (cfg.modulus != 15 || cfg.base != 11))
    throw std::invalid_argument("compiled multiplier exists only for N=15, x=11");
  BlockPlan plan = plan_blocks(n, t);
  Circuit c;
  c.num_qubits = t + w;
  c.num_clbits = n;
  c.output_map.assign(n, 0);
  std::vector<int> work(w);
  for (int i = 0; i < w; ++i) work[i] = t + i;

  c.add(SingleQubitOp{gate_x(), t});  // work register to |1>

  std::vector<Dyadic> coeff(n);  // phi weight per classical (exponent) bit
  for (int j = 0; j <= plan.l; ++j) {
    const int b = plan.block_sizes[j];
    const int vbase = j == 0 ? plan.l * t : (plan.l - j) * t;  // exponent bits covered
    for (int m = 0; m < b; ++m) c.add(SingleQubitOp{gate_h(), m});
    for (int m = 0; m < b; ++m) {
      const int e = vbase + m;
      if (use_compiled) {
        // 11^{2^e} mod 15 is the identity for e >= 1
        if (e == 0) {
          c.add(CxOp{m, t + 1});
          c.add(CxOp{m, t + 3});
        }
      } else {
        c.add(ControlledPermutationOp{m, work, modexp_permutation(cfg.base, cfg.modulus, e)});
      }
    }
    if (j > 0) {
      for (int k = 1; k <= t; ++k)
        for (int bit = 0; bit < n; ++bit)
          if (!coeff[bit].is_zero())
            c.add(ConditionedPhaseOp{bit, 1, coeff[bit].shifted(k - 1), t - k});
    }
    {
      Circuit qft = build_standard_qft(b);
      for (const auto& op : qft.ops) c.add(op);
    }
    for (int m = 0; m < b; ++m) c.add(MeasureOp{m, vbase + m});
    const int out_base = j == 0 ? 0 : n - (plan.l - j + 1) * t;
    for (int x = 0; x < b; ++x) c.output_map[out_base + x] = vbase + b - 1 - x;
    if (j < plan.l) {
      for (int m = 0; m < b; ++m) c.add(ResetOp{m});
      if (j > 0)
        for (auto& wgt : coeff)
          if (!wgt.is_zero()) wgt = wgt.shifted(t);
      for (int x = 0; x < b; ++x)
        coeff[vbase + b - 1 - x] = coeff[vbase + b - 1 - x] + Dyadic(1, b + 1 - x);
    }
  }
  return c;
}

OutcomeDistribution run_order_finding(const ShorConfig& cfg, RunMode mode, std::uint64_t shots,
                                      std::uint64_t seed, bool use_compiled) {
  Circuit c = build_order_finding_circuit(cfg, use_compiled);
  StateVector input(c.num_qubits);
  if (mode == RunMode::enumerate) return enumerate_branches(c, input);
  return sample(c, input, shots, seed);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> continued_fraction_order(
    std::uint64_t c, int n_bits, std::uint64_t modulus) {
  if (n_bits < 1 || n_bits > 62) throw std::invalid_argument("continued fractions: bad n");
  const std::uint64_t q = 1ull << n_bits;
  if (c >= q) throw std::out_of_range("continued fractions: c out of range");
  if (c == 0) return std::nullopt;
  // convergents of c/q via the Euclidean quotient sequence
  std::uint64_t num = c, den = q;
  std::uint64_t d_prev = 0, d_cur = 1;  // numerators d
  std::uint64_t r_prev = 1, r_cur = 0;  // denominators r
  while (den != 0) {
    std::uint64_t a = num / den;
    std::uint64_t d_next = a * d_cur + d_prev;
    std::uint64_t r_next = a * r_cur + r_prev;
    d_prev = d_cur; d_cur = d_next;
    r_prev = r_cur; r_cur = r_next;
    std::uint64_t rem = num % den;
    num = den;
    den = rem;
    if (r_cur > modulus) break;
    // |c/q - d/r| <= 1/2^{n+1}  <=>  2*|c*r - d*q| <= r
    __int128 diff = static_cast<__int128>(c) * r_cur - static_cast<__int128>(d_cur) * q;
    if (diff < 0) diff = -diff;
    if (2 * diff <= static_cast<__int128>(r_cur) && d_cur > 0)
      return std::make_pair(d_cur, r_cur);
  }
  return std::nullopt;
}

ShorOutcome extract_factors(const ShorConfig& cfg, std::uint64_t r) {
  ShorOutcome out;
  if (r < 1) throw std::invalid_argument("extract_factors: r must be >= 1");
  const std::uint64_t n_value = cfg.modulus, x = cfg.base;
  if (pow_mod(x, r, n_value) != 1) {
    out.status = ShorStatus::failure_bad_order;
    return out;
  }
  out.order = r;
  if (r % 2 != 0) {
    out.status = ShorStatus::failure_trivial_gcd;
    return out;
  }
  const std::uint64_t y = pow_mod(x, r / 2, n_value);
  if (y == n_value - 1) {
    out.status = ShorStatus::failure_trivial_gcd;
    return out;
  }
  for (std::uint64_t g : {std::gcd(y + n_value - 1, n_value), std::gcd(y + 1, n_value)})
    if (g > 1 && g < n_value) out.factors.insert(g);
  out.status = out.factors.empty() ? ShorStatus::failure_trivial_gcd : ShorStatus::success;
  return out;
}

ShorOutcome factor(const ShorConfig& cfg, std::uint64_t shots, std::uint64_t seed, int attempts) {
  if (attempts < 1) throw std::invalid_argument("factor: attempts must be >= 1");
  const bool compiled = cfg.modulus == 15 && cfg.base == 11;
  Circuit circuit = build_order_finding_circuit(cfg, compiled);
  StateVector input(circuit.num_qubits);
  ShorOutcome last;
  for (int i = 0; i < attempts; ++i) {
    auto counts = sample_counts(circuit, input, shots, splitmix64(seed + i));
    // post-process the observed outcomes from most to least frequent
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ordered(counts.begin(), counts.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (const auto& [c, hits] : ordered) {
      ShorOutcome out;
      out.c = c;
      out.attempts_used = i + 1;
      if (c == 0) {
        out.status = ShorStatus::failure_zero;
        last = out;
        continue;
      }
      auto conv = continued_fraction_order(c, cfg.exponent_bits, cfg.modulus);
      if (!conv) {
        out.status = ShorStatus::failure_bad_order;
        last = out;
        continue;
      }
      out.convergent = conv;
      ShorOutcome post = extract_factors(cfg, conv->second);
      out.status = post.status;
      out.order = post.order;
      out.factors = post.factors;
      last = out;
      if (out.status == ShorStatus::success) return out;
    }
  }
  return last;
}

}  // namespace sqft
