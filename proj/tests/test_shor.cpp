#include <doctest.h>

#include <numeric>

#include "sqft/shor.hpp"

using namespace sqft;

TEST_CASE("config validation") {
  CHECK_THROWS(ShorConfig::make(16, 3, 2));  // even
  CHECK_THROWS(ShorConfig::make(17, 3, 2));  // prime
  CHECK_THROWS(ShorConfig::make(27, 2, 2));  // prime power
  CHECK_THROWS(ShorConfig::make(15, 5, 2));  // shared factor
  ShorConfig cfg = ShorConfig::make(15, 11, 2);
  CHECK(cfg.exponent_bits == 8);
  CHECK(cfg.work_qubits == 4);
}

TEST_CASE("modexp permutation") {
  auto p0 = modexp_permutation(11, 15, 0);
  CHECK(p0[1] == 11);
  CHECK(p0[11] == 1);
  CHECK(p0[15] == 15);  // identity padding above N
  auto p1 = modexp_permutation(11, 15, 1);  // 11^2 = 121 = 1 mod 15
  for (std::uint32_t y = 0; y < 16; ++y) CHECK(p1[y] == y);
  CHECK_THROWS(modexp_permutation(5, 15, 0));
}

TEST_CASE("compiled multiplier agrees with the permutation on its subspace") {
  Circuit frag = compiled_mult11_mod15();
  Eigen::MatrixXcd u = circuit_unitary(frag);
  auto perm = modexp_permutation(11, 15, 0);
  for (std::uint32_t y : {1u, 11u}) {
    Eigen::VectorXcd in = Eigen::VectorXcd::Zero(16);
    in(y) = 1.0;
    Eigen::VectorXcd out = u * in;
    CHECK(std::abs(out(perm[y]) - 1.0) <= 1e-12);
  }
}

TEST_CASE("compiled multiplier has order two") {
  Eigen::MatrixXcd u = circuit_unitary(compiled_mult11_mod15());
  CHECK(max_abs_diff(u * u, Eigen::MatrixXcd::Identity(16, 16)) < 1e-12);
}

TEST_CASE("order finding for N=15, x=11 peaks at 0 and 128") {
  ShorConfig cfg = ShorConfig::make(15, 11, 2);
  auto d = run_order_finding(cfg, RunMode::enumerate);
  CHECK(d.prob(0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(d.prob(128) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-9));

  auto d_compiled = run_order_finding(cfg, RunMode::enumerate, 0, 0, true);
  CHECK(total_variation(d, d_compiled) <= 1e-9);
}

TEST_CASE("distribution is independent of t") {
  ShorConfig base = ShorConfig::make(15, 11, 2);
  auto d2 = run_order_finding(base, RunMode::enumerate);
  for (int t : {1, 4, 8}) {
    auto d = run_order_finding(ShorConfig::make(15, 11, t), RunMode::enumerate);
    CHECK(total_variation(d, d2) <= 1e-9);
  }
}

TEST_CASE("order 4 base: uniform peaks at multiples of 64") {
  auto d = run_order_finding(ShorConfig::make(15, 7, 2), RunMode::enumerate);
  for (std::uint64_t c : {0ull, 64ull, 128ull, 192ull})
    CHECK(d.prob(c) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("peak structure matches the closed form for several bases") {
  for (std::uint64_t x : {11ull, 7ull, 2ull}) {
    std::uint64_t r = multiplicative_order(x, 15);
    auto d = run_order_finding(ShorConfig::make(15, x, 2), RunMode::enumerate);
    for (std::uint64_t k = 0; k < r; ++k)
      CHECK(d.prob(k * 256 / r) == doctest::Approx(1.0 / static_cast<double>(r)).epsilon(1e-9));
  }
}

TEST_CASE("continued fractions") {
  auto c128 = continued_fraction_order(128, 8, 15);
  REQUIRE(c128.has_value());
  CHECK(c128->first == 1);
  CHECK(c128->second == 2);

  CHECK_FALSE(continued_fraction_order(0, 8, 15).has_value());

  auto c192 = continued_fraction_order(192, 8, 15);
  REQUIRE(c192.has_value());
  CHECK(c192->first == 3);
  CHECK(c192->second == 4);
}

TEST_CASE("continued fractions against a brute-force oracle") {
  const int n = 8;
  const std::uint64_t q = 1ull << n;
  for (std::uint64_t c = 1; c < q; c += 7) {
    // oracle: smallest r <= 15 admitting any d with |c/q - d/r| <= 1/2q
    std::optional<std::uint64_t> oracle_r;
    for (std::uint64_t r = 1; r <= 15 && !oracle_r; ++r)
      for (std::uint64_t d = 1; d <= r; ++d) {
        long long diff = static_cast<long long>(c * r) - static_cast<long long>(d * q);
        if (2 * std::abs(diff) <= static_cast<long long>(r) && std::gcd(d, r) == 1) {
          oracle_r = r;
          break;
        }
      }
    auto got = continued_fraction_order(c, n, 15);
    CHECK(got.has_value() == oracle_r.has_value());
    if (got && oracle_r) CHECK(got->second == *oracle_r);
  }
}

TEST_CASE("extract_factors") {
  ShorConfig cfg = ShorConfig::make(15, 11, 2);
  auto out = extract_factors(cfg, 2);
  CHECK(out.status == ShorStatus::success);
  CHECK(out.factors == std::set<std::uint64_t>{3, 5});

  auto bad = extract_factors(cfg, 3);
  CHECK(bad.status == ShorStatus::failure_bad_order);

  auto trivial = extract_factors(ShorConfig::make(15, 14, 2), 2);
  CHECK(trivial.status == ShorStatus::failure_trivial_gcd);

  auto x7 = extract_factors(ShorConfig::make(15, 7, 2), 4);
  CHECK(x7.status == ShorStatus::success);
  CHECK(x7.factors == std::set<std::uint64_t>{3, 5});

  // intuition trap: x = 4 has order 2 and still factors
  auto x4 = extract_factors(ShorConfig::make(15, 4, 2), 2);
  CHECK(x4.status == ShorStatus::success);
  CHECK(x4.factors == std::set<std::uint64_t>{3, 5});
}

TEST_CASE("factor succeeds end to end") {
  ShorConfig cfg = ShorConfig::make(15, 11, 2);
  ShorOutcome out = factor(cfg, 128, 7);
  CHECK(out.status == ShorStatus::success);
  CHECK(out.factors == std::set<std::uint64_t>{3, 5});
  CHECK(out.attempts_used <= 10);

  // deterministic per seed
  ShorOutcome again = factor(cfg, 128, 7);
  CHECK(again.c == out.c);
  CHECK(again.attempts_used == out.attempts_used);
}

TEST_CASE("factor 21 with base 2") {
  ShorConfig cfg = ShorConfig::make(21, 2, 2);
  CHECK(multiplicative_order(2, 21) == 6);
  ShorOutcome out = factor(cfg, 256, 3);
  CHECK(out.status == ShorStatus::success);
  CHECK(out.factors == std::set<std::uint64_t>{3, 7});
}

TEST_CASE("post-processing soundness on every measurable c") {
  ShorConfig cfg = ShorConfig::make(15, 7, 2);
  for (std::uint64_t c = 0; c < 256; ++c) {
    auto conv = continued_fraction_order(c, 8, 15);
    if (!conv) continue;
    auto out = extract_factors(cfg, conv->second);
    if (out.status != ShorStatus::success) continue;
    std::uint64_t prod = 1;
    for (std::uint64_t f : out.factors) {
      CHECK(f > 1);
      CHECK(f < 15);
      CHECK(15 % f == 0);
      prod *= f;
    }
    CHECK(15 % prod == 0);
  }
}

TEST_CASE("recycled order-finding register width") {
  ShorConfig cfg = ShorConfig::make(15, 11, 2);
  Circuit c = build_order_finding_circuit(cfg);
  CHECK(c.num_qubits == 6);  // t + work
  c.validate();
}
