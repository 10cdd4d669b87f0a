#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqft {

/// Exact rational phase num / 2^exp, in cycles, kept in [0, 1).
/// All measurement-feedback phases are dyadic, so no rounding happens
/// before a gate matrix is materialized.
struct Dyadic {
  std::uint64_t num = 0;
  int exp = 0;  // denominator 2^exp, 0 <= exp <= 62

  Dyadic() = default;
  Dyadic(std::uint64_t numerator, int exponent) : num(numerator), exp(exponent) {
    if (exponent < 0 || exponent > 62)
      throw std::invalid_argument("dyadic exponent out of range");
    num &= mask(exp);  // reduce mod 1
    normalize();
  }

  static std::uint64_t mask(int e) {
    return e >= 64 ? ~0ull : (1ull << e) - 1;
  }

  void normalize() {
    while (exp > 0 && (num & 1ull) == 0 && num != 0) {
      num >>= 1;
      --exp;
    }
    if (num == 0) exp = 0;
  }

  bool is_zero() const { return num == 0; }

  /// value / 2^k, still exact
  Dyadic shifted(int k) const {
    if (num == 0) return {};
    if (exp + k > 62) throw std::overflow_error("dyadic shift overflow");
    return Dyadic(num, exp + k);
  }

  Dyadic operator+(const Dyadic& o) const {
    int e = exp > o.exp ? exp : o.exp;
    if (e > 62) throw std::overflow_error("dyadic add overflow");
    std::uint64_t a = num << (e - exp);
    std::uint64_t b = o.num << (e - o.exp);
    return Dyadic((a + b) & mask(e), e);
  }

  /// k * this mod 1
  Dyadic times(std::uint64_t k) const {
    if (num == 0 || k == 0) return {};
    std::uint64_t prod = (k & mask(exp)) * num;  // factors of 2^exp in k wrap to 0
    return Dyadic(prod & mask(exp), exp);
  }

  bool operator==(const Dyadic& o) const { return num == o.num && exp == o.exp; }

  double cycles() const { return static_cast<double>(num) / static_cast<double>(1ull << exp); }
  double radians() const { return 2.0 * std::numbers::pi * cycles(); }

  std::string str() const {
    return std::to_string(num) + "/2^" + std::to_string(exp);
  }
};

}  // namespace sqft
