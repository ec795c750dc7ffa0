#include "darcais/aberth.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace darcais {

namespace {

// contiguous mpfr array with RAII; mpfr_t cannot live in std::vector directly
class MpArray {
public:
  MpArray(size_t n, long prec) : v_(n) {
    for (auto& x : v_) mpfr_init2(&x, prec);
  }
  ~MpArray() {
    for (auto& x : v_) mpfr_clear(&x);
  }
  MpArray(const MpArray&) = delete;
  MpArray& operator=(const MpArray&) = delete;
  mpfr_ptr operator[](size_t i) { return &v_[i]; }
  mpfr_srcptr operator[](size_t i) const { return &v_[i]; }
  size_t size() const { return v_.size(); }

private:
  std::vector<__mpfr_struct> v_;
};

double log2_abs(const Int& v) {
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(exp);
}

// Fujiwara-style bound: 2 max_k (|a_{d-k}| / |a_d|)^(1/k)
double fujiwara_log2(const IntPoly& q) {
  const auto& c = q.coeffs();
  long d = q.degree();
  double lead = log2_abs(c.back());
  double best = -1e300;
  for (long k = 1; k <= d; ++k) {
    const Int& a = c[static_cast<size_t>(d - k)];
    if (sgn(a) == 0) continue;
    best = std::max(best, (log2_abs(a) - lead) / static_cast<double>(k));
  }
  return best + 1.0;
}

struct Sweep {
  long d;
  long prec;
  MpArray cr, ci;      // coefficients, constant first (rounded to prec)
  MpArray zr, zi;      // approximations
  MpArray t;           // temporaries

  Sweep(const IntPoly& q, long prec_)
      : d(q.degree()), prec(prec_),
        cr(static_cast<size_t>(d + 1), prec_), ci(1, prec_),
        zr(static_cast<size_t>(d), prec_), zi(static_cast<size_t>(d), prec_),
        t(16, prec_) {
    for (long k = 0; k <= d; ++k)
      mpfr_set_z(cr[static_cast<size_t>(k)], q[static_cast<size_t>(k)].get_mpz_t(), MPFR_RNDN);
  }

  void init_on_circle(const IntPoly& q) {
    double rlog = fujiwara_log2(q) - 0.23;  // ~0.85 * bound
    mpfr_set_d(t[0], rlog, MPFR_RNDN);
    mpfr_exp2(t[0], t[0], MPFR_RNDN);  // radius
    mpfr_const_pi(t[1], MPFR_RNDN);
    for (long j = 0; j < d; ++j) {
      // angle = 2 pi j / d + 0.376 (fixed jitter keeps runs reproducible and
      // breaks the real-axis symmetry)
      mpfr_mul_si(t[2], t[1], 2 * j, MPFR_RNDN);
      mpfr_div_si(t[2], t[2], d, MPFR_RNDN);
      mpfr_add_d(t[2], t[2], 0.376, MPFR_RNDN);
      mpfr_sin_cos(t[3], t[4], t[2], MPFR_RNDN);
      mpfr_mul(zr[static_cast<size_t>(j)], t[0], t[4], MPFR_RNDN);
      mpfr_mul(zi[static_cast<size_t>(j)], t[0], t[3], MPFR_RNDN);
    }
  }

  void seed_from(const Sweep& old) {
    for (long j = 0; j < d; ++j) {
      mpfr_set(zr[static_cast<size_t>(j)], old.zr[static_cast<size_t>(j)], MPFR_RNDN);
      mpfr_set(zi[static_cast<size_t>(j)], old.zi[static_cast<size_t>(j)], MPFR_RNDN);
    }
  }

  // p(z) and p'(z) by a joint Horner pass; in/out via t-slots:
  // result p -> (t[4], t[5]), dp -> (t[6], t[7]); uses t[8..11]
  void eval_pair(mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_ptr pr = t[4], pi = t[5], dr = t[6], di = t[7];
    mpfr_ptr u = t[8], v = t[9];
    mpfr_set(pr, cr[static_cast<size_t>(d)], MPFR_RNDN);
    mpfr_set_zero(pi, 1);
    mpfr_set_zero(dr, 1);
    mpfr_set_zero(di, 1);
    for (long k = d - 1; k >= 0; --k) {
      // dp = dp*z + p
      mpfr_fmms(u, dr, x, di, y, MPFR_RNDN);   // dr*x - di*y
      mpfr_fmma(v, dr, y, di, x, MPFR_RNDN);   // dr*y + di*x
      mpfr_add(dr, u, pr, MPFR_RNDN);
      mpfr_add(di, v, pi, MPFR_RNDN);
      // p = p*z + a_k
      mpfr_fmms(u, pr, x, pi, y, MPFR_RNDN);
      mpfr_fmma(v, pr, y, pi, x, MPFR_RNDN);
      mpfr_add(pr, u, cr[static_cast<size_t>(k)], MPFR_RNDN);
      mpfr_set(pi, v, MPFR_RNDN);
    }
  }

  // one Gauss-Seidel sweep; returns max relative correction (as log2, very
  // negative when converged)
  double iterate() {
    double max_rel = -1e300;
    mpfr_ptr nr = t[10], ni = t[11], sr = t[12], si = t[13], u = t[14], v = t[15];
    for (long i = 0; i < d; ++i) {
      mpfr_ptr x = zr[static_cast<size_t>(i)], y = zi[static_cast<size_t>(i)];
      eval_pair(x, y);
      if (mpfr_zero_p(t[4]) && mpfr_zero_p(t[5])) continue;  // sitting on a root
      // Newton correction N = p / dp
      if (mpfr_zero_p(t[6]) && mpfr_zero_p(t[7])) {
        // derivative vanished: nudge deterministically and move on
        mpfr_mul_2si(u, x, -8, MPFR_RNDN);
        mpfr_add(x, x, u, MPFR_RNDN);
        mpfr_add_ui(y, y, 1, MPFR_RNDN);
        max_rel = 0.0;
        continue;
      }
      complex_div(nr, ni, t[4], t[5], t[6], t[7], u, v);
      // S = sum_{j != i} 1 / (z_i - z_j)
      mpfr_set_zero(sr, 1);
      mpfr_set_zero(si, 1);
      for (long j = 0; j < d; ++j) {
        if (j == i) continue;
        mpfr_sub(t[2], x, zr[static_cast<size_t>(j)], MPFR_RNDN);
        mpfr_sub(t[3], y, zi[static_cast<size_t>(j)], MPFR_RNDN);
        // 1/(t2 + i t3) accumulated into (sr, si)
        mpfr_fmma(u, t[2], t[2], t[3], t[3], MPFR_RNDN);  // |diff|^2
        if (mpfr_zero_p(u)) continue;                     // collided points
        mpfr_div(t[2], t[2], u, MPFR_RNDN);
        mpfr_div(t[3], t[3], u, MPFR_RNDN);
        mpfr_add(sr, sr, t[2], MPFR_RNDN);
        mpfr_sub(si, si, t[3], MPFR_RNDN);
      }
      // w = N / (1 - N S)
      mpfr_fmms(u, nr, sr, ni, si, MPFR_RNDN);
      mpfr_fmma(v, nr, si, ni, sr, MPFR_RNDN);
      mpfr_ui_sub(u, 1, u, MPFR_RNDN);
      mpfr_neg(v, v, MPFR_RNDN);
      if (mpfr_zero_p(u) && mpfr_zero_p(v)) {
        mpfr_set(u, nr, MPFR_RNDN);  // degenerate denominator: Newton step
        mpfr_set(v, ni, MPFR_RNDN);
      } else {
        complex_div(t[2], t[3], nr, ni, u, v, t[0], t[1]);
        mpfr_set(u, t[2], MPFR_RNDN);
        mpfr_set(v, t[3], MPFR_RNDN);
      }
      mpfr_sub(x, x, u, MPFR_RNDN);
      mpfr_sub(y, y, v, MPFR_RNDN);
      // relative size of the correction
      double wlog = corr_log2(u, v);
      double zlog = corr_log2(x, y);
      max_rel = std::max(max_rel, wlog - std::max(zlog, -60.0));
    }
    return max_rel;
  }

  static double corr_log2(mpfr_srcptr a, mpfr_srcptr b) {
    double la = mpfr_zero_p(a) ? -1e300 : static_cast<double>(mpfr_get_exp(a));
    double lb = mpfr_zero_p(b) ? -1e300 : static_cast<double>(mpfr_get_exp(b));
    return std::max(la, lb);
  }

  // (qr + i qi) = (ar + i ai) / (br + i bi); u is scratch
  static void complex_div(mpfr_ptr qr, mpfr_ptr qi, mpfr_srcptr ar, mpfr_srcptr ai,
                          mpfr_srcptr br, mpfr_srcptr bi, mpfr_ptr u, mpfr_ptr v) {
    mpfr_fmma(u, br, br, bi, bi, MPFR_RNDN);  // |b|^2
    mpfr_fmma(v, ar, br, ai, bi, MPFR_RNDN);  // ar br + ai bi
    mpfr_div(qr, v, u, MPFR_RNDN);
    mpfr_fmms(v, ai, br, ar, bi, MPFR_RNDN);  // ai br - ar bi
    mpfr_div(qi, v, u, MPFR_RNDN);
  }
};

struct Certification {
  bool ok = false;
  std::vector<BigFloat> radius;  // RNDU
  std::vector<Rat> residual_ub;
  double worst_radius_log2 = 0;
};

// Weierstrass disks around the approximations: radius_i =
// d |q(z_i)| / (|lead| prod |z_i - z_j|), everything directed outward.
Certification certify(const IntPoly& q, Sweep& sw, const Rat& tol, long cert_prec) {
  const long d = sw.d;
  Certification cert;
  cert.radius.reserve(static_cast<size_t>(d));
  cert.residual_ub.reserve(static_cast<size_t>(d));

  BigFloat lead_lb = BigFloat::from_int(q.leading(), cert_prec, MPFR_RNDZ).abs(cert_prec, MPFR_RNDD);
  BigFloat one_minus = BigFloat::sub(BigFloat::from_long(1, 64), BigFloat::pow2(3 - cert_prec),
                                     64, MPFR_RNDD);
  Rat tol_rat = tol;
  bool all_small = true;
  double worst = -1e300;

  MpArray diff(2, cert_prec);
  for (long i = 0; i < d; ++i) {
    BigComplex zi{BigFloat(cert_prec), BigFloat(cert_prec)};
    mpfr_set(zi.re.raw(), sw.zr[static_cast<size_t>(i)], MPFR_RNDN);  // exact, prec grows
    mpfr_set(zi.im.raw(), sw.zi[static_cast<size_t>(i)], MPFR_RNDN);
    ComplexDisk zdisk = ComplexDisk::exact(zi);
    ComplexDisk val = q.eval_disk(zdisk, cert_prec);
    BigFloat pe_ub = BigFloat::add(val.center.abs_ub(64), val.radius, 64, MPFR_RNDU);

    BigFloat prod_lb = BigFloat::from_long(1, 64);
    for (long j = 0; j < d; ++j) {
      if (j == i) continue;
      mpfr_sub(diff[0], sw.zr[static_cast<size_t>(i)], sw.zr[static_cast<size_t>(j)], MPFR_RNDN);
      mpfr_sub(diff[1], sw.zi[static_cast<size_t>(i)], sw.zi[static_cast<size_t>(j)], MPFR_RNDN);
      BigFloat h(64);
      mpfr_hypot(h.raw(), diff[0], diff[1], MPFR_RNDD);
      h = BigFloat::mul(h, one_minus, 64, MPFR_RNDD);
      if (h.sign() <= 0) {
        prod_lb = BigFloat(64);
        break;
      }
      prod_lb = BigFloat::mul(prod_lb, h, 64, MPFR_RNDD);
    }

    BigFloat rad(64);
    if (prod_lb.sign() <= 0 || lead_lb.sign() <= 0) {
      mpfr_set_inf(rad.raw(), 1);
    } else {
      rad = BigFloat::div(pe_ub, BigFloat::mul(lead_lb, prod_lb, 64, MPFR_RNDD), 64, MPFR_RNDU);
      rad = BigFloat::mul(rad, BigFloat::from_long(d, 64), 64, MPFR_RNDU);
    }
    if (!mpfr_number_p(rad.raw())) {
      all_small = false;
      worst = 1e300;
    } else {
      if (!rad.is_zero()) worst = std::max(worst, static_cast<double>(mpfr_get_exp(rad.raw())));
      if (rad.to_rat() > tol_rat) all_small = false;
    }
    cert.radius.push_back(rad);
    cert.residual_ub.push_back(pe_ub.to_rat());
  }
  cert.worst_radius_log2 = worst;
  if (!all_small) return cert;

  // pairwise disjoint disks pin exactly one root each
  for (long i = 0; i < d && all_small; ++i) {
    for (long j = i + 1; j < d; ++j) {
      mpfr_sub(diff[0], sw.zr[static_cast<size_t>(i)], sw.zr[static_cast<size_t>(j)], MPFR_RNDN);
      mpfr_sub(diff[1], sw.zi[static_cast<size_t>(i)], sw.zi[static_cast<size_t>(j)], MPFR_RNDN);
      BigFloat h(64);
      mpfr_hypot(h.raw(), diff[0], diff[1], MPFR_RNDD);
      h = BigFloat::mul(h, one_minus, 64, MPFR_RNDD);
      BigFloat rsum = BigFloat::add(cert.radius[static_cast<size_t>(i)],
                                    cert.radius[static_cast<size_t>(j)], 64, MPFR_RNDU);
      if (!(cmp(h, rsum) > 0)) {
        all_small = false;
        break;
      }
    }
  }
  cert.ok = all_small;
  return cert;
}

}  // namespace

RootReport all_roots(const RationalPoly& p, const RootOptions& opts) {
  if (p.is_zero()) throw domain_error("all_roots: zero polynomial");
  auto [ip, den] = p.clear_denominators();
  RootReport rep;
  rep.n = p.degree();
  rep.method = "aberth";
  rep.precision_bits = opts.start_precision;
  if (p.degree() == 0) {
    rep.min_re = RatInterval(Rat(0));
    rep.max_mod = RatInterval(Rat(0));
    return rep;
  }

  // exact deflation of zero roots
  long zeros = 0;
  while (sgn(ip[static_cast<size_t>(zeros)]) == 0) ++zeros;
  for (long i = 0; i < zeros; ++i) {
    rep.roots.push_back({Rat(0), Rat(0), Rat(0)});
    rep.residuals.push_back(Rat(0));
  }
  std::vector<Int> rest(ip.coeffs().begin() + zeros, ip.coeffs().end());
  IntPoly q{std::move(rest)};

  if (q.degree() == 1) {
    rep.roots.push_back({Rat(-q[0], q[1]), Rat(0), Rat(0)});
    rep.residuals.push_back(Rat(0));
  } else if (q.degree() >= 2) {
    long coeff_bits = q.max_coeff_bits();
    long prec = opts.start_precision;
    std::unique_ptr<Sweep> sw = std::make_unique<Sweep>(q, prec);
    sw->init_on_circle(q);
    bool done = false;
    std::string last_diag;
    while (true) {
      long max_sweeps = 60 + 4 * q.degree();
      for (long s = 0; s < max_sweeps; ++s) {
        double rel = sw->iterate();
        if (rel < -(prec - 8)) break;
      }
      long cert_prec = std::max(prec, coeff_bits + 64);
      Certification cert = certify(q, *sw, opts.tol, cert_prec);
      if (cert.ok) {
        for (long i = 0; i < q.degree(); ++i) {
          BigFloat re(prec), im(prec);
          mpfr_set(re.raw(), sw->zr[static_cast<size_t>(i)], MPFR_RNDN);
          mpfr_set(im.raw(), sw->zi[static_cast<size_t>(i)], MPFR_RNDN);
          rep.roots.push_back({re.to_rat(), im.to_rat(),
                               cert.radius[static_cast<size_t>(i)].to_rat()});
          rep.residuals.push_back(cert.residual_ub[static_cast<size_t>(i)] / Rat(den));
        }
        rep.precision_bits = prec;
        done = true;
        break;
      }
      {
        std::ostringstream os;
        os << "worst radius ~2^" << static_cast<long>(cert.worst_radius_log2)
           << " at precision " << prec;
        last_diag = os.str();
      }
      if (prec * 2 > opts.max_precision) break;
      prec *= 2;
      auto next = std::make_unique<Sweep>(q, prec);
      next->seed_from(*sw);
      sw = std::move(next);
    }
    if (!done)
      throw resource_error("all_roots: certification did not reach tol within the " +
                           std::to_string(opts.max_precision) + "-bit precision cap (" +
                           last_diag + ")");
  }

  // min Re and max |root| over the certified disks, as exact intervals
  bool first = true;
  Rat min_lo, min_hi, mod_lo, mod_hi;
  for (const RootEnclosure& r : rep.roots) {
    Rat re_lo = r.re - r.rad, re_hi = r.re + r.rad;
    RatInterval mod = sqrt_enclosure(r.re * r.re + r.im * r.im, Rat(1, 10000000000L));
    Rat m_lo = mod.lo - r.rad;
    if (m_lo.sign() < 0) m_lo = Rat(0);
    Rat m_hi = mod.hi + r.rad;
    if (first) {
      min_lo = re_lo;
      min_hi = re_hi;
      mod_lo = m_lo;
      mod_hi = m_hi;
      first = false;
    } else {
      if (re_lo < min_lo) min_lo = re_lo;
      if (re_hi < min_hi) min_hi = re_hi;
      if (m_lo > mod_lo) mod_lo = m_lo;
      if (m_hi > mod_hi) mod_hi = m_hi;
    }
  }
  if (!first) {
    rep.min_re = RatInterval(min_lo, min_hi);
    rep.max_mod = RatInterval(mod_lo, mod_hi);
  }
  return rep;
}

std::string RootReport::json() const {
  std::ostringstream os;
  os << "{\n  \"n\": " << n << ",\n  \"method\": \"" << method
     << "\",\n  \"precision_bits\": " << precision_bits << ",\n";
  os << "  \"min_re\": {\"lo\": \"" << min_re.lo.str() << "\", \"hi\": \"" << min_re.hi.str()
     << "\"},\n";
  os << "  \"max_mod\": {\"lo\": \"" << max_mod.lo.str() << "\", \"hi\": \"" << max_mod.hi.str()
     << "\"},\n  \"roots\": [\n";
  for (size_t i = 0; i < roots.size(); ++i) {
    os << "    {\"re\": \"" << roots[i].re.str() << "\", \"im\": \"" << roots[i].im.str()
       << "\", \"rad\": \"" << roots[i].rad.str() << "\"}" << (i + 1 < roots.size() ? "," : "")
       << "\n";
  }
  os << "  ],\n  \"residuals\": [";
  for (size_t i = 0; i < residuals.size(); ++i)
    os << (i ? ", " : "") << '"' << residuals[i].str() << '"';
  os << "]\n}";
  return os.str();
}

bool verify_zero_free(const RootReport& report, const KappaCertificate& cert,
                      const ArithFn& h, Rat* ratio_out) {
  Rat hm = h.eval(report.n - 1);
  Rat threshold = cert.kappa * hm;
  if (ratio_out) {
    *ratio_out = hm.sign() > 0 ? report.max_mod.hi / hm : Rat(0);
  }
  if (report.max_mod.hi <= threshold) return true;
  if (report.max_mod.lo > threshold) return false;
  throw resource_error("verify_zero_free: enclosure straddles the radius; refine with a "
                       "smaller tolerance");
}

}  // namespace darcais
