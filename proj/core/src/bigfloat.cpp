#include "darcais/bigfloat.hpp"

#include <sstream>

namespace darcais {

BigFloat BigFloat::from_rat(const Rat& v, long prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.f_, v.raw().get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_int(const Int& v, long prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.f_, v.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::from_long(long v, long prec) {
  BigFloat r(prec);
  mpfr_set_si(r.f_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(long prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_const_pi(r.f_, rnd);
  return r;
}

BigFloat BigFloat::pow2(long e) {
  BigFloat r(8);
  mpfr_set_si_2exp(r.f_, 1, e, MPFR_RNDN);
  return r;
}

#define DARCAIS_BF_BINOP(name, fn)                                                  \
  BigFloat BigFloat::name(const BigFloat& a, const BigFloat& b, long prec,          \
                          mpfr_rnd_t rnd) {                                         \
    BigFloat r(prec);                                                               \
    fn(r.f_, a.f_, b.f_, rnd);                                                      \
    return r;                                                                       \
  }

DARCAIS_BF_BINOP(add, mpfr_add)
DARCAIS_BF_BINOP(sub, mpfr_sub)
DARCAIS_BF_BINOP(mul, mpfr_mul)
DARCAIS_BF_BINOP(div, mpfr_div)
DARCAIS_BF_BINOP(hypot, mpfr_hypot)
DARCAIS_BF_BINOP(max, mpfr_max)
#undef DARCAIS_BF_BINOP

#define DARCAIS_BF_UNOP(name, fn)                                      \
  BigFloat BigFloat::name(const BigFloat& a, long prec, mpfr_rnd_t rnd) { \
    BigFloat r(prec);                                                  \
    fn(r.f_, a.f_, rnd);                                               \
    return r;                                                          \
  }

DARCAIS_BF_UNOP(sqrt, mpfr_sqrt)
DARCAIS_BF_UNOP(ln, mpfr_log)
DARCAIS_BF_UNOP(sin, mpfr_sin)
DARCAIS_BF_UNOP(cos, mpfr_cos)
#undef DARCAIS_BF_UNOP

BigFloat BigFloat::neg() const {
  BigFloat r(prec());
  mpfr_neg(r.f_, f_, MPFR_RNDN);  // exact
  return r;
}

BigFloat BigFloat::abs(long p, mpfr_rnd_t rnd) const {
  BigFloat r(p);
  mpfr_abs(r.f_, f_, rnd);
  return r;
}

Rat BigFloat::to_rat() const {
  if (mpfr_zero_p(f_)) return Rat(0);
  if (!mpfr_number_p(f_)) throw domain_error("BigFloat::to_rat: non-finite value");
  Int m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), f_);
  if (e >= 0) return Rat(Int(m * int_pow(2, static_cast<unsigned long>(e))));
  return Rat(m, int_pow(2, static_cast<unsigned long>(-e)));
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  // %.*Rg
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  if (mpfr_asprintf(&s, fmt.c_str(), f_) < 0) return "?";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigComplex BigComplex::from_rat(const Rat& r, const Rat& i, long prec) {
  return {BigFloat::from_rat(r, prec), BigFloat::from_rat(i, prec)};
}

BigComplex BigComplex::add(const BigComplex& a, const BigComplex& b, long prec) {
  return {BigFloat::add(a.re, b.re, prec, MPFR_RNDN),
          BigFloat::add(a.im, b.im, prec, MPFR_RNDN)};
}

BigComplex BigComplex::sub(const BigComplex& a, const BigComplex& b, long prec) {
  return {BigFloat::sub(a.re, b.re, prec, MPFR_RNDN),
          BigFloat::sub(a.im, b.im, prec, MPFR_RNDN)};
}

BigComplex BigComplex::mul(const BigComplex& a, const BigComplex& b, long prec) {
  // (ac - bd) + (ad + bc) i, each component in one fused pass
  BigFloat ac = BigFloat::mul(a.re, b.re, prec, MPFR_RNDN);
  BigFloat bd = BigFloat::mul(a.im, b.im, prec, MPFR_RNDN);
  BigFloat ad = BigFloat::mul(a.re, b.im, prec, MPFR_RNDN);
  BigFloat bc = BigFloat::mul(a.im, b.re, prec, MPFR_RNDN);
  return {BigFloat::sub(ac, bd, prec, MPFR_RNDN), BigFloat::add(ad, bc, prec, MPFR_RNDN)};
}

BigComplex BigComplex::div(const BigComplex& a, const BigComplex& b, long prec) {
  BigFloat n1 = BigFloat::mul(b.re, b.re, prec, MPFR_RNDN);
  BigFloat n2 = BigFloat::mul(b.im, b.im, prec, MPFR_RNDN);
  BigFloat den = BigFloat::add(n1, n2, prec, MPFR_RNDN);
  BigFloat ac = BigFloat::mul(a.re, b.re, prec, MPFR_RNDN);
  BigFloat bd = BigFloat::mul(a.im, b.im, prec, MPFR_RNDN);
  BigFloat bc = BigFloat::mul(a.im, b.re, prec, MPFR_RNDN);
  BigFloat ad = BigFloat::mul(a.re, b.im, prec, MPFR_RNDN);
  return {BigFloat::div(BigFloat::add(ac, bd, prec, MPFR_RNDN), den, prec, MPFR_RNDN),
          BigFloat::div(BigFloat::sub(bc, ad, prec, MPFR_RNDN), den, prec, MPFR_RNDN)};
}

BigComplex BigComplex::neg() const { return {re.neg(), im.neg()}; }

BigFloat BigComplex::abs_ub(long prec) const { return BigFloat::hypot(re, im, prec, MPFR_RNDU); }
BigFloat BigComplex::abs_lb(long prec) const {
  BigFloat v = BigFloat::hypot(re, im, prec, MPFR_RNDD);
  if (v.sign() < 0) return BigFloat(prec);  // clamp at 0
  return v;
}

namespace {

// Upper bound on the componentwise rounding error of one complex multiply or
// add at precision p, expressed as a multiple of the operand magnitudes:
// 8 ulp is a generous cover for the <= 3 roundings per component.
BigFloat rounding_cushion(long prec) { return BigFloat::pow2(3 - prec); }

// complex add/mul tracking whether every component rounding was exact; exact
// chains on exact inputs keep radius 0 (rational points, small integers)
BigComplex add_tracked(const BigComplex& a, const BigComplex& b, long prec, bool& exact) {
  BigComplex r{BigFloat(prec), BigFloat(prec)};
  int t = 0;
  t |= mpfr_add(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  t |= mpfr_add(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  exact = t == 0;
  return r;
}

BigComplex mul_tracked(const BigComplex& a, const BigComplex& b, long prec, bool& exact) {
  BigFloat ac(prec), bd(prec), ad(prec), bc(prec);
  int t = 0;
  t |= mpfr_mul(ac.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  t |= mpfr_mul(bd.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  t |= mpfr_mul(ad.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  t |= mpfr_mul(bc.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  BigComplex r{BigFloat(prec), BigFloat(prec)};
  t |= mpfr_sub(r.re.raw(), ac.raw(), bd.raw(), MPFR_RNDN);
  t |= mpfr_add(r.im.raw(), ad.raw(), bc.raw(), MPFR_RNDN);
  exact = t == 0;
  return r;
}

}  // namespace

ComplexDisk ComplexDisk::exact(BigComplex c) {
  ComplexDisk d;
  d.center = std::move(c);
  d.radius = BigFloat(kRadPrec);
  return d;
}

ComplexDisk ComplexDisk::with_radius(BigComplex c, BigFloat r) {
  ComplexDisk d;
  d.center = std::move(c);
  d.radius = std::move(r);
  return d;
}

ComplexDisk ComplexDisk::from_rat(const Rat& re, const Rat& im, long prec) {
  BigComplex c{BigFloat(prec), BigFloat(prec)};
  int t = 0;
  t |= mpfr_set_q(c.re.raw(), re.raw().get_mpq_t(), MPFR_RNDN);
  t |= mpfr_set_q(c.im.raw(), im.raw().get_mpq_t(), MPFR_RNDN);
  if (t == 0) return exact(std::move(c));
  // correctly rounded components: |error| <= 2^-prec * |component| each
  BigFloat mag = c.abs_ub(kRadPrec);
  BigFloat rad = BigFloat::mul(mag, BigFloat::pow2(1 - prec), kRadPrec, MPFR_RNDU);
  return with_radius(std::move(c), std::move(rad));
}

ComplexDisk ComplexDisk::add(const ComplexDisk& a, const ComplexDisk& b, long prec) {
  bool exact_ops = false;
  BigComplex c = add_tracked(a.center, b.center, prec, exact_ops);
  BigFloat rad = BigFloat::add(a.radius, b.radius, kRadPrec, MPFR_RNDU);
  if (!exact_ops) {
    BigFloat cushion =
        BigFloat::mul(c.abs_ub(kRadPrec), rounding_cushion(prec), kRadPrec, MPFR_RNDU);
    rad = BigFloat::add(rad, cushion, kRadPrec, MPFR_RNDU);
  }
  return with_radius(std::move(c), std::move(rad));
}

ComplexDisk ComplexDisk::sub(const ComplexDisk& a, const ComplexDisk& b, long prec) {
  ComplexDisk nb = b;
  nb.center = b.center.neg();
  return add(a, nb, prec);
}

ComplexDisk ComplexDisk::mul(const ComplexDisk& a, const ComplexDisk& b, long prec) {
  bool exact_ops = false;
  BigComplex c = mul_tracked(a.center, b.center, prec, exact_ops);
  bool zero_rads = a.radius.is_zero() && b.radius.is_zero();
  if (exact_ops && zero_rads) return exact(std::move(c));
  BigFloat ma = a.center.abs_ub(kRadPrec);
  BigFloat mb = b.center.abs_ub(kRadPrec);
  // |a||rb| + |b||ra| + ra rb + rounding
  BigFloat rad = BigFloat::mul(ma, b.radius, kRadPrec, MPFR_RNDU);
  rad = BigFloat::add(rad, BigFloat::mul(mb, a.radius, kRadPrec, MPFR_RNDU), kRadPrec, MPFR_RNDU);
  rad = BigFloat::add(rad, BigFloat::mul(a.radius, b.radius, kRadPrec, MPFR_RNDU), kRadPrec, MPFR_RNDU);
  if (!exact_ops) {
    BigFloat prod = BigFloat::mul(ma, mb, kRadPrec, MPFR_RNDU);
    rad = BigFloat::add(rad, BigFloat::mul(prod, rounding_cushion(prec), kRadPrec, MPFR_RNDU),
                        kRadPrec, MPFR_RNDU);
  }
  return with_radius(std::move(c), std::move(rad));
}

ComplexDisk ComplexDisk::scale(const ComplexDisk& a, const Rat& s, long prec) {
  return mul(a, from_rat(s, Rat(0), prec), prec);
}

RatInterval ComplexDisk::abs_interval(long prec) const {
  BigFloat ub = BigFloat::add(center.abs_ub(prec), radius, kRadPrec, MPFR_RNDU);
  BigFloat lb = BigFloat::sub(center.abs_lb(prec), radius, kRadPrec, MPFR_RNDD);
  Rat lo = lb.sign() < 0 ? Rat(0) : lb.to_rat();
  return RatInterval(lo, ub.to_rat());
}

bool ComplexDisk::excludes_zero(long prec) const {
  return cmp(center.abs_lb(prec), radius) > 0;
}

}  // namespace darcais
