#include "darcais/growth.hpp"

#include <sstream>

namespace darcais {

std::string growth_check_name(GrowthCheck c) {
  switch (c) {
    case GrowthCheck::a_remainder: return "a_remainder";
    case GrowthCheck::a_sandwich: return "a_sandwich";
    case GrowthCheck::b_remainder: return "b_remainder";
    case GrowthCheck::b_sandwich: return "b_sandwich";
    case GrowthCheck::half_sandwich: return "half_sandwich";
  }
  return "?";
}

namespace {

struct Angle {
  std::string name;
  bool real_negative;  // theta = pi: sample is an exact rational
};

const std::vector<Angle> kAngles = {
    {"pi", true}, {"pi/2", false}, {"pi/4", false}, {"offset", false}};

std::string ratio_detail(const Rat& lhs, const Rat& rhs) {
  std::ostringstream os;
  os << "lhs " << lhs.decimal(9) << " vs rhs " << rhs.decimal(9);
  return os.str();
}

// lhs < rhs, degrading to <= in the eps = 0 limit case (where the paper's
// strict bounds become the limiting equalities)
bool less(const Rat& lhs, const Rat& rhs, bool strict) {
  return strict ? lhs < rhs : lhs <= rhs;
}

// Exact checks at real x.
bool check_exact(GrowthCheck kind, const PolySequence& seq, long n, const Rat& x,
                 const Rat& eps, const Rat& g2, std::string& detail) {
  const bool strict = eps.sign() > 0;
  Rat hn = seq.h().eval(n);
  Rat hm = seq.h().eval(n - 1);
  Rat pn = seq.eval(n, x);
  Rat pm = seq.eval(n - 1, x);
  if (pn.is_zero()) {
    detail = "P_n(x) = 0 inside the certified region";
    return false;
  }
  Rat apn = pn.abs(), apm = pm.abs();
  Rat ax = x.abs();
  switch (kind) {
    case GrowthCheck::a_remainder: {
      Rat lhs = (pn - x / hn * pm).abs();
      Rat rhs = eps * ax / hn * apm;
      detail = ratio_detail(lhs, rhs);
      return less(lhs, rhs, strict);
    }
    case GrowthCheck::a_sandwich: {
      Rat mid = ax / hn * apm;
      bool ok = less((Rat(1) - eps) * mid, apn, strict) &&
                less(apn, (Rat(1) + eps) * mid, strict);
      detail = ratio_detail(apn, mid);
      return ok;
    }
    case GrowthCheck::b_remainder: {
      Rat lhs = (pn - (x + g2 * hm) / hn * pm).abs();
      Rat rhs = eps * ax / hn * apm;
      detail = ratio_detail(lhs, rhs);
      return less(lhs, rhs, strict);
    }
    case GrowthCheck::b_sandwich: {
      Rat shift = (x + g2 * hm).abs();
      Rat lo = (shift - eps * ax) / hn * apm;
      Rat hi = (shift + eps * ax) / hn * apm;
      detail = ratio_detail(apn, hi);
      return less(lo, apn, strict) && less(apn, hi, strict);
    }
    case GrowthCheck::half_sandwich: {
      Rat mid = ax / (Rat(2) * hn) * apm;
      detail = ratio_detail(apn, mid);
      return mid < apn && apn < Rat(3) * mid;
    }
  }
  return false;
}

ComplexDisk sample_disk(const Rat& rho, const std::string& angle, long prec) {
  if (angle == "pi/2") return ComplexDisk::from_rat(Rat(0), rho, prec);
  BigFloat theta(prec);
  if (angle == "pi/4") {
    mpfr_const_pi(theta.raw(), MPFR_RNDN);
    mpfr_div_ui(theta.raw(), theta.raw(), 4, MPFR_RNDN);
  } else {  // "offset": 1/64 rad off the positive real axis
    mpfr_set_ui_2exp(theta.raw(), 1, -6, MPFR_RNDN);
  }
  BigFloat r = BigFloat::from_rat(rho, prec);
  BigComplex c{BigFloat::mul(r, BigFloat::cos(theta, prec, MPFR_RNDN), prec, MPFR_RNDN),
               BigFloat::mul(r, BigFloat::sin(theta, prec, MPFR_RNDN), prec, MPFR_RNDN)};
  // cos/sin/mul/representation roundings: 4 ulp of rho covers them all
  BigFloat rad = BigFloat::mul(BigFloat::from_rat(rho, ComplexDisk::kRadPrec, MPFR_RNDU),
                               BigFloat::pow2(2 - prec), ComplexDisk::kRadPrec, MPFR_RNDU);
  return ComplexDisk::with_radius(std::move(c), std::move(rad));
}

// Certified checks at complex x with |x| = rho exactly.
bool check_disk(GrowthCheck kind, const PolySequence& seq, long n, const Rat& rho,
                const std::string& angle, const Rat& eps, const Rat& g2, long prec,
                std::string& detail) {
  const bool strict = eps.sign() > 0;
  Rat hn = seq.h().eval(n);
  Rat hm = seq.h().eval(n - 1);
  ComplexDisk x = sample_disk(rho, angle, prec);
  ComplexDisk pn = seq.eval_complex(n, x, prec);
  ComplexDisk pm = seq.eval_complex(n - 1, x, prec);
  RatInterval apn = pn.abs_interval(prec);
  RatInterval apm = pm.abs_interval(prec);
  if (!(apn.lo > Rat(0))) {
    detail = "cannot exclude P_n(x) = 0";
    return false;
  }
  switch (kind) {
    case GrowthCheck::a_remainder: {
      ComplexDisk t = ComplexDisk::scale(ComplexDisk::mul(x, pm, prec), hn.inverse(), prec);
      RatInterval diff = ComplexDisk::sub(pn, t, prec).abs_interval(prec);
      Rat rhs = eps * rho / hn * apm.lo;
      detail = ratio_detail(diff.hi, rhs);
      return less(diff.hi, rhs, strict);
    }
    case GrowthCheck::a_sandwich: {
      Rat lo = (Rat(1) - eps) * rho / hn * apm.hi;
      Rat hi = (Rat(1) + eps) * rho / hn * apm.lo;
      detail = ratio_detail(apn.lo, hi);
      return less(lo, apn.lo, strict) && less(apn.hi, hi, strict);
    }
    case GrowthCheck::b_remainder: {
      ComplexDisk shifted = ComplexDisk::add(
          x, ComplexDisk::from_rat(g2 * hm, Rat(0), prec), prec);
      ComplexDisk t = ComplexDisk::scale(ComplexDisk::mul(shifted, pm, prec), hn.inverse(), prec);
      RatInterval diff = ComplexDisk::sub(pn, t, prec).abs_interval(prec);
      Rat rhs = eps * rho / hn * apm.lo;
      detail = ratio_detail(diff.hi, rhs);
      return less(diff.hi, rhs, strict);
    }
    case GrowthCheck::b_sandwich: {
      ComplexDisk shifted = ComplexDisk::add(
          x, ComplexDisk::from_rat(g2 * hm, Rat(0), prec), prec);
      RatInterval sh = shifted.abs_interval(prec);
      Rat lo_factor = sh.hi - eps * rho;
      if (lo_factor.sign() < 0) lo_factor = Rat(0);
      Rat lo = lo_factor / hn * apm.hi;
      Rat hi = (sh.lo + eps * rho) / hn * apm.lo;
      detail = ratio_detail(apn.lo, hi);
      return less(lo, apn.lo, strict) && less(apn.hi, hi, strict);
    }
    case GrowthCheck::half_sandwich: {
      Rat lo = rho / (Rat(2) * hn) * apm.hi;
      Rat hi = Rat(3) * rho / (Rat(2) * hn) * apm.lo;
      detail = ratio_detail(apn.lo, hi);
      return less(lo, apn.lo, strict) && less(apn.hi, hi, strict);
    }
  }
  return false;
}

GrowthReport run_checks(const PolySequence& seq, const Rat& kappa, const Rat& eps,
                        const std::vector<GrowthCheck>& kinds, long n_lo, long n_hi,
                        const GrowthOptions& opts) {
  if (n_lo < 1) throw domain_error("verify_growth: n must be >= 1");
  GrowthReport report;
  Rat g2 = seq.g().eval(2);
  for (long n = n_lo; n <= n_hi; ++n) {
    Rat base = kappa * seq.h().eval(n - 1);
    if (base.is_zero()) base = kappa * seq.h().eval(1);  // n = 1: h(0) = 0
    for (const Rat& delta : opts.deltas) {
      Rat rho = base * (Rat(1) + delta);
      for (const Angle& ang : kAngles) {
        for (GrowthCheck kind : kinds) {
          GrowthCheckResult res;
          res.n = n;
          res.delta = delta;
          res.angle = ang.name;
          res.check = kind;
          if (ang.real_negative) {
            res.exact = true;
            res.pass = check_exact(kind, seq, n, -rho, eps, g2, res.detail);
          } else {
            for (long p = opts.precision; p <= opts.max_precision; p *= 2) {
              res.pass = check_disk(kind, seq, n, rho, ang.name, eps, g2, p, res.detail);
              if (res.pass) break;
            }
          }
          if (!res.pass) ++report.failures;
          report.checks.push_back(std::move(res));
        }
      }
    }
  }
  return report;
}

}  // namespace

GrowthReport verify_growth(const PolySequence& seq, const KappaCertificate& cert,
                           long n_lo, long n_hi, const GrowthOptions& opts) {
  if (cert.g_name != seq.g().name())
    throw domain_error("verify_growth: certificate is for g = '" + cert.g_name +
                       "', sequence has g = '" + seq.g().name() + "'");
  std::vector<GrowthCheck> kinds =
      cert.variant == Variant::A
          ? std::vector<GrowthCheck>{GrowthCheck::a_remainder, GrowthCheck::a_sandwich}
          : std::vector<GrowthCheck>{GrowthCheck::b_remainder, GrowthCheck::b_sandwich};
  return run_checks(seq, cert.kappa, cert.eps, kinds, n_lo, n_hi, opts);
}

GrowthReport verify_growth_half_sandwich(const PolySequence& seq, const Rat& kappa,
                                         long n_lo, long n_hi, const GrowthOptions& opts) {
  return run_checks(seq, kappa, Rat(1, 2), {GrowthCheck::half_sandwich}, n_lo, n_hi, opts);
}

}  // namespace darcais
