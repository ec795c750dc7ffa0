#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darcais/bigfloat.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/rational.hpp"

namespace darcais {

/// Dense polynomial with exact rational coefficients, constant term first.
/// Trailing zero coefficients are trimmed; the zero polynomial is the empty
/// vector (degree -1).
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RationalPoly constant(Rat v);
  static RationalPoly monomial(Rat coeff, long power);
  /// p / den with integer numerator coefficients.
  static RationalPoly from_scaled(const IntPoly& p, const Int& den);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(long k) const;
  const Rat& leading() const { return c_.back(); }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly scaled(const Rat& s) const;
  RationalPoly operator-() const { return scaled(Rat(-1)); }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

  /// Exact Horner evaluation.
  Rat eval(const Rat& x) const;
  /// p(q(x)), exact.
  RationalPoly compose(const RationalPoly& q) const;
  /// Certified complex evaluation: value plus rigorous rounding-error radius
  /// (running error bound of Horner's scheme at the given precision).
  ComplexDisk eval_complex(const Rat& re, const Rat& im, long prec) const;
  ComplexDisk eval_complex(const ComplexDisk& x, long prec) const;

  /// order-fold formal derivative (order 0 returns the polynomial itself).
  RationalPoly derivative(long order = 1) const;

  /// Clears denominators: returns (integer polynomial N, positive den D)
  /// with *this == N / D and gcd(content(N), D) == 1.
  std::pair<IntPoly, Int> clear_denominators() const;

  std::string str(const std::string& var = "x") const;
  /// JSON object {"n": degree, "coeffs": ["num/den", ...]} as a string.
  std::string json() const;

private:
  void trim();
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace darcais
