#include "sqft/gates.hpp"

#include <cmath>
#include <sstream>

namespace sqft {

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace

std::string PiAngle::str() const {
  if (!dyadic) return format_double(raw);
  if (num == 0) return "0";
  std::string s;
  if (num == 1)
    s = "pi";
  else if (num == -1)
    s = "-pi";
  else
    s = std::to_string(num) + "*pi";
  if (exp > 0) s += "/" + std::to_string(1ll << exp);
  return s;
}

std::string Gate1::label() const {
  if (params.empty()) return name;
  std::string s = name + "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].str();
  }
  return s + ")";
}

Gate1 gate_u1(PiAngle lambda) {
  Gate1 g;
  g.name = "u1";
  g.params = {lambda};
  g.m << 1.0, 0.0, 0.0, std::exp(complexd(0, lambda.radians()));
  return g;
}

Gate1 gate_u2(PiAngle lambda, PiAngle phi) {
  Gate1 g;
  g.name = "u2";
  g.params = {lambda, phi};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  complexd el = std::exp(complexd(0, lambda.radians()));
  complexd ep = std::exp(complexd(0, phi.radians()));
  g.m << inv_sqrt2, -inv_sqrt2 * el, inv_sqrt2 * ep, inv_sqrt2 * el * ep;
  return g;
}

Gate1 gate_u3(PiAngle theta, PiAngle lambda, PiAngle phi) {
  Gate1 g;
  g.name = "u3";
  g.params = {theta, lambda, phi};
  double c = std::cos(theta.radians() / 2);
  double s = std::sin(theta.radians() / 2);
  complexd el = std::exp(complexd(0, lambda.radians()));
  complexd ep = std::exp(complexd(0, phi.radians()));
  g.m << c, -el * s, ep * s, el * ep * c;
  return g;
}

Gate1 gate_h() {
  Gate1 g = gate_u2(PiAngle::pi_frac(1, 0), PiAngle::zero());
  g.name = "h";
  g.params.clear();
  return g;
}

Gate1 gate_s() {
  Gate1 g = gate_u1(PiAngle::pi_frac(1, 1));
  g.name = "s";
  g.params.clear();
  return g;
}

Gate1 gate_t() {
  Gate1 g = gate_u1(PiAngle::pi_frac(1, 2));
  g.name = "t";
  g.params.clear();
  return g;
}

Gate1 gate_x() {
  Gate1 g;
  g.name = "x";
  g.m << 0, 1, 1, 0;
  return g;
}

Gate1 gate_id() {
  Gate1 g;
  g.name = "id";
  g.m = Matrix2cd::Identity();
  return g;
}

Gate1 r_k(int k) {
  if (k < 1) throw std::invalid_argument("r_k: k must be >= 1");
  if (k > 30) throw std::invalid_argument("r_k: k > 30 underflows double-precision phase");
  // 2*pi/2^k radians = pi/2^{k-1}
  return gate_u1(PiAngle::pi_frac(1, k - 1));
}

Gate1 s_k(int k, const Dyadic& phi) {
  if (k < 1) throw std::invalid_argument("s_k: k must be >= 1");
  Dyadic p = phi.shifted(k - 1);
  if (p.is_zero()) return gate_u1(PiAngle::zero());
  // 2*pi*(num/2^e) radians = (2*num)*pi/2^e; p < 1 so e >= 1 here
  return gate_u1(PiAngle::pi_frac(2 * static_cast<std::int64_t>(p.num), p.exp));
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  Eigen::MatrixXcd d = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

bool unitary_equal(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                   bool up_to_global_phase, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("unitary_equal: dimension mismatch");
  if (!up_to_global_phase) return max_abs_diff(u, v) <= tol;
  Eigen::Index r = 0, c = 0;
  v.cwiseAbs().maxCoeff(&r, &c);
  complexd lambda = u(r, c) / v(r, c);
  double mag = std::abs(lambda);
  if (mag < 1e-14) return false;
  lambda /= mag;
  return max_abs_diff(u, lambda * v) <= tol;
}

ControlledDecomposition decompose_phase_gate(const Gate1& u) {
  const Matrix2cd& m = u.m;
  if (std::abs(m(0, 1)) > 1e-12 || std::abs(m(1, 0)) > 1e-12 ||
      std::abs(m(0, 0) - 1.0) > 1e-12)
    throw std::invalid_argument("decompose_phase_gate: expected diag(1, e^{i theta})");
  PiAngle theta;
  if (u.name == "u1" && u.params.size() == 1 && u.params[0].dyadic)
    theta = u.params[0];
  else
    theta = PiAngle::of_radians(std::arg(m(1, 1)));
  ControlledDecomposition d;
  d.alpha = theta.scaled_pow2(1);
  d.a = gate_u1(theta.scaled_pow2(2));
  d.b = gate_u1(theta.scaled_pow2(1).negated());
  d.c = gate_u1(theta.scaled_pow2(2));
  return d;
}

}  // namespace sqft
