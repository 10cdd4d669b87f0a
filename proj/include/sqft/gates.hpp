#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqft/dyadic.hpp"

namespace sqft {

using complexd = std::complex<double>;
using Matrix2cd = Eigen::Matrix2cd;

/// Angle in radians, tracked as an exact signed multiple of pi
/// (num / 2^exp * pi) whenever it is one. Dyadic angles print
/// symbolically ("pi/32") in emitted circuits.
struct PiAngle {
  bool dyadic = true;
  std::int64_t num = 0;  // valid when dyadic
  int exp = 0;
  double raw = 0.0;  // valid when !dyadic

  PiAngle() = default;

  static PiAngle pi_frac(std::int64_t num, int exp) {
    PiAngle a;
    a.dyadic = true;
    a.num = num;
    a.exp = exp;
    a.reduce();
    return a;
  }
  static PiAngle zero() { return pi_frac(0, 0); }
  static PiAngle of_radians(double r) {
    PiAngle a;
    a.dyadic = false;
    a.raw = r;
    return a;
  }

  void reduce() {
    while (exp > 0 && num % 2 == 0 && num != 0) {
      num /= 2;
      --exp;
    }
    if (num == 0) exp = 0;
  }

  double radians() const {
    if (!dyadic) return raw;
    return std::numbers::pi * static_cast<double>(num) / static_cast<double>(1ll << exp);
  }

  PiAngle scaled_pow2(int shift) const {  // angle / 2^shift
    if (!dyadic) return of_radians(raw / static_cast<double>(1ll << shift));
    return pi_frac(num, exp + shift);
  }
  PiAngle negated() const {
    if (!dyadic) return of_radians(-raw);
    return pi_frac(-num, exp);
  }

  std::string str() const;  // "pi/32", "-pi/16", "3*pi/4", "0", or decimal
};

/// A single-qubit gate together with its hardware-vocabulary spelling.
struct Gate1 {
  Matrix2cd m;
  std::string name;             // u1, u2, u3, h, s, t, x, id
  std::vector<PiAngle> params;  // as printed in emitted circuits

  std::string label() const;
};

Gate1 gate_u1(PiAngle lambda);
Gate1 gate_u2(PiAngle lambda, PiAngle phi);
Gate1 gate_u3(PiAngle theta, PiAngle lambda, PiAngle phi);
Gate1 gate_h();
Gate1 gate_s();
Gate1 gate_t();
Gate1 gate_x();
Gate1 gate_id();

/// R_k = diag(1, e^{2 pi i / 2^k}), the QFT rotation.
Gate1 r_k(int k);

/// S_k = diag(1, e^{2 pi i phi / 2^{k-1}}) with phi in cycles;
/// the measurement-feedback phase gate.
Gate1 s_k(int k, const Dyadic& phi);

bool is_unitary(const Eigen::MatrixXcd& m, double tol = 1e-12);

/// Entrywise max-norm comparison; in global-phase mode the phase is
/// fixed from the largest-magnitude entry of V.
bool unitary_equal(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                   bool up_to_global_phase = false, double tol = 1e-10);

/// Controlled-U as e^{i alpha} A X B X C with A B C = I (two CX gates
/// plus single-qubit corrections; the alpha phase rides on the control
/// line as a U1).
struct ControlledDecomposition {
  PiAngle alpha;
  Gate1 a, b, c;
};

/// Decomposes a diagonal phase gate diag(1, e^{i theta}):
/// alpha = theta/2, A = C = U1(theta/4), B = U1(-theta/2).
ControlledDecomposition decompose_phase_gate(const Gate1& u);

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace sqft
