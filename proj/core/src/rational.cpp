#include "darcais/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace darcais {

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

long bit_length(const Int& v) {
  if (sgn(v) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

std::string to_string(const Int& v) { return v.get_str(); }

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw domain_error("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw domain_error("Rat: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rat(r);
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  bool neg = e < 0;
  unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat r(int_pow(num(), ue), int_pow(den(), ue));
  return neg ? r.inverse() : r;
}

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rat parse_impl(std::string_view s, bool allow_decimal) {
  std::string_view in = s;
  bool neg = false;
  if (!in.empty() && (in[0] == '+' || in[0] == '-')) {
    neg = in[0] == '-';
    in.remove_prefix(1);
  }
  auto fail = [&]() -> Rat {
    throw domain_error("cannot parse rational from '" + std::string(s) + "'");
  };

  Rat value;
  if (auto slash = in.find('/'); slash != std::string_view::npos) {
    auto nums = in.substr(0, slash);
    auto dens = in.substr(slash + 1);
    if (!all_digits(nums) || !all_digits(dens)) fail();
    Int den(std::string(dens), 10);
    if (sgn(den) == 0) throw domain_error("rational with zero denominator: '" + std::string(s) + "'");
    value = Rat(Int(std::string(nums), 10), den);
  } else if (auto dot = in.find('.'); dot != std::string_view::npos) {
    if (!allow_decimal)
      throw domain_error("decimal not accepted here (use num/den): '" + std::string(s) + "'");
    auto ip = in.substr(0, dot);
    auto fp = in.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp)) fail();
    Int scale = int_pow(10, fp.size());
    Int whole = Int(std::string(ip), 10) * scale + Int(std::string(fp), 10);
    value = Rat(whole, scale);
  } else {
    if (!all_digits(in)) fail();
    value = Rat(Int(std::string(in), 10));
  }
  return neg ? -value : value;
}

}  // namespace

Rat Rat::parse(std::string_view s) { return parse_impl(s, true); }
Rat Rat::parse_fraction_only(std::string_view s) { return parse_impl(s, false); }

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::decimal(int digits, RoundMode mode) const {
  Int scale = int_pow(10, static_cast<unsigned long>(digits));
  mpq_class scaled = q_ * mpq_class(scale);

  Int quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(),
              scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  // quot = floor(scaled), 0 <= rem/den < 1
  bool bump = false;
  switch (mode) {
    case RoundMode::floor:
      break;
    case RoundMode::ceil:
      bump = sgn(rem) != 0;
      break;
    case RoundMode::half_even: {
      Int twice = rem * 2;
      int c = cmp(twice, scaled.get_den());
      if (c > 0) bump = true;
      else if (c == 0) bump = mpz_odd_p(quot.get_mpz_t()) != 0;
      break;
    }
  }
  if (bump) quot += 1;

  bool neg = sgn(quot) < 0;
  Int mag = ::abs(quot);
  Int ip = mag / scale;
  std::string out = neg ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = Int(mag % scale).get_str();
    if (frac.size() < static_cast<size_t>(digits))
      frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw domain_error("RatInterval: hi < lo");
}

RatInterval sqrt_enclosure(const Rat& v, const Rat& tol) {
  if (v.sign() < 0) throw domain_error("sqrt_enclosure: negative argument");
  if (v.is_zero()) return RatInterval(Rat(0));

  // Dyadic bisection from an integer bracket; every step verified exactly.
  Rat lo(0), hi = v < 1 ? Rat(1) : v;
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    if (mid * mid <= v)
      lo = mid;
    else
      hi = mid;
  }
  return RatInterval(lo, hi);
}

}  // namespace darcais
