#pragma once

#include <vector>

#include "darcais/bigfloat.hpp"
#include "darcais/rational.hpp"

namespace darcais {

/// Dense polynomial with big-integer coefficients, constant term first.
/// The zero polynomial has an empty coefficient vector. This is the exact
/// workhorse behind the recurrence engine and the Sturm machinery, where
/// staying in Z avoids rational gcd churn.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int v);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& operator[](size_t k) const { return c_[k]; }
  const Int& leading() const { return c_.back(); }

  /// this += w * p, coefficientwise (fused big-integer multiply-add).
  void axpy(const Int& w, const IntPoly& p);
  /// this *= x (shift up one power).
  void shift_up();
  void negate();
  void scale_by(const Int& s);
  /// Divide every coefficient by s; s must divide exactly.
  void divexact_by(const Int& s);

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly derivative() const;
  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;
  int sign_at(const Rat& x) const;
  /// Horner over complex disks with a rigorous running error radius;
  /// coefficients are converted exactly (precision must cover their bits).
  ComplexDisk eval_disk(const ComplexDisk& x, long prec) const;

  /// gcd of all coefficients, positive; 0 for the zero polynomial.
  Int content() const;
  /// this / content, sign normalized so the leading coefficient is > 0.
  IntPoly primitive_part() const;
  /// Exact division, throws if the division leaves a remainder.
  IntPoly divide_exact(const IntPoly& d) const;
  /// Largest bit length over the coefficients.
  long max_coeff_bits() const;

private:
  void trim();
  std::vector<Int> c_;
};

/// Pseudo-remainder: sign-corrected so that the result is a positive
/// multiple of rem(a, b); used by the Sturm chain (which only needs signs).
IntPoly pseudo_rem_signed(const IntPoly& a, const IntPoly& b);
/// Polynomial gcd over Z via primitive pseudo-remainders.
IntPoly int_poly_gcd(IntPoly a, IntPoly b);

}  // namespace darcais
