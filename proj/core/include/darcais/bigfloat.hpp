#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "darcais/rational.hpp"

namespace darcais {

/// Floating-point value with explicit mantissa precision (bits). Every
/// operation names the precision and rounding of its result; nothing is
/// ambient. Conversion from Rat at precision p is correctly rounded, so the
/// relative error is at most 2^(1-p).
class BigFloat {
public:
  explicit BigFloat(long prec = 64) {
    mpfr_init2(f_, prec);
    mpfr_set_zero(f_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(f_, 2);
    mpfr_swap(f_, o.f_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(f_, o.f_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(f_); }

  static BigFloat from_rat(const Rat& v, long prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_int(const Int& v, long prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_long(long v, long prec);
  static BigFloat pi(long prec, mpfr_rnd_t rnd = MPFR_RNDN);
  /// 2^e at minimal precision; exact.
  static BigFloat pow2(long e);

  long prec() const { return mpfr_get_prec(f_); }
  bool is_zero() const { return mpfr_zero_p(f_) != 0; }
  int sign() const { return mpfr_sgn(f_); }

  static BigFloat add(const BigFloat& a, const BigFloat& b, long prec, mpfr_rnd_t rnd);
  static BigFloat sub(const BigFloat& a, const BigFloat& b, long prec, mpfr_rnd_t rnd);
  static BigFloat mul(const BigFloat& a, const BigFloat& b, long prec, mpfr_rnd_t rnd);
  static BigFloat div(const BigFloat& a, const BigFloat& b, long prec, mpfr_rnd_t rnd);
  static BigFloat sqrt(const BigFloat& a, long prec, mpfr_rnd_t rnd);
  static BigFloat hypot(const BigFloat& x, const BigFloat& y, long prec, mpfr_rnd_t rnd);
  static BigFloat ln(const BigFloat& a, long prec, mpfr_rnd_t rnd);
  static BigFloat sin(const BigFloat& a, long prec, mpfr_rnd_t rnd);
  static BigFloat cos(const BigFloat& a, long prec, mpfr_rnd_t rnd);
  static BigFloat max(const BigFloat& a, const BigFloat& b, long prec, mpfr_rnd_t rnd);

  BigFloat neg() const;
  BigFloat abs(long prec, mpfr_rnd_t rnd) const;

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

  /// Exact conversion: every finite BigFloat is a dyadic rational.
  Rat to_rat() const;
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(f_, rnd); }
  std::string str(int digits = 17) const;

  mpfr_ptr raw() { return f_; }
  mpfr_srcptr raw() const { return f_; }

private:
  mpfr_t f_;
};

/// Complex value as a re/im pair of BigFloats.
struct BigComplex {
  BigFloat re, im;

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex from_rat(const Rat& r, const Rat& i, long prec);

  static BigComplex add(const BigComplex& a, const BigComplex& b, long prec);
  static BigComplex sub(const BigComplex& a, const BigComplex& b, long prec);
  static BigComplex mul(const BigComplex& a, const BigComplex& b, long prec);
  static BigComplex div(const BigComplex& a, const BigComplex& b, long prec);
  BigComplex neg() const;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  /// Upper / lower bounds on the modulus (directed rounding).
  BigFloat abs_ub(long prec) const;
  BigFloat abs_lb(long prec) const;
};

/// Disk in the complex plane: certified enclosure {z : |z - center| <= radius}.
/// Radius arithmetic always rounds up, so enclosures stay rigorous through
/// add/mul/scale chains (Horner evaluation in particular).
struct ComplexDisk {
  BigComplex center;
  BigFloat radius;  // kept at a fixed small precision, rounded up

  static constexpr long kRadPrec = 64;

  static ComplexDisk exact(BigComplex c);
  /// Point value with an explicit containment radius.
  static ComplexDisk with_radius(BigComplex c, BigFloat r);
  /// Rat point, correctly rounded center + representation radius.
  static ComplexDisk from_rat(const Rat& re, const Rat& im, long prec);

  static ComplexDisk add(const ComplexDisk& a, const ComplexDisk& b, long prec);
  static ComplexDisk sub(const ComplexDisk& a, const ComplexDisk& b, long prec);
  static ComplexDisk mul(const ComplexDisk& a, const ComplexDisk& b, long prec);
  /// Scale by an exact rational.
  static ComplexDisk scale(const ComplexDisk& a, const Rat& s, long prec);

  /// Enclosure of |z| over the disk, as exact rationals.
  RatInterval abs_interval(long prec) const;
  /// True iff 0 is certainly not in the disk.
  bool excludes_zero(long prec) const;
};

}  // namespace darcais
