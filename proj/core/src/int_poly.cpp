#include "darcais/int_poly.hpp"

#include <algorithm>

namespace darcais {

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  if (sgn(v) != 0) p.c_.push_back(std::move(v));
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

void IntPoly::axpy(const Int& w, const IntPoly& p) {
  if (sgn(w) == 0 || p.is_zero()) return;
  if (c_.size() < p.c_.size()) c_.resize(p.c_.size(), Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i)
    mpz_addmul(c_[i].get_mpz_t(), w.get_mpz_t(), p.c_[i].get_mpz_t());
  trim();
}

void IntPoly::shift_up() {
  if (is_zero()) return;
  c_.insert(c_.begin(), Int(0));
}

void IntPoly::negate() {
  for (auto& v : c_) v = -v;
}

void IntPoly::scale_by(const Int& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return;
  }
  for (auto& v : c_) v *= s;
}

void IntPoly::divexact_by(const Int& s) {
  if (sgn(s) == 0) throw domain_error("IntPoly: division by zero");
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  r.axpy(Int(1), b);
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  r.axpy(Int(-1), b);
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<long>(k);
  return IntPoly(std::move(out));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

Int IntPoly::eval_int(const Int& x) const {
  Int r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  // Horner with the denominator cleared: sign of sum c_k num^k den^(n-k)
  if (is_zero()) return 0;
  if (x.is_integer()) return sgn(eval_int(x.num()));
  const Int num = x.num(), den = x.den();
  Int r = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    r *= num;
    mpz_addmul(r.get_mpz_t(), it->get_mpz_t(),
               int_pow(den, static_cast<unsigned long>(it - c_.rbegin())).get_mpz_t());
  }
  return sgn(r);
}

namespace {

// Coefficient as a disk: exact when it fits the precision, otherwise the
// correctly rounded value with its ulp as radius.
ComplexDisk coeff_disk(const Int& c, long prec) {
  BigFloat v(prec);
  int inexact = mpfr_set_z(v.raw(), c.get_mpz_t(), MPFR_RNDN);
  BigComplex z{std::move(v), BigFloat(prec)};
  if (inexact == 0) return ComplexDisk::exact(std::move(z));
  BigFloat rad = BigFloat::mul(z.re.abs(ComplexDisk::kRadPrec, MPFR_RNDU),
                               BigFloat::pow2(1 - prec), ComplexDisk::kRadPrec, MPFR_RNDU);
  return ComplexDisk::with_radius(std::move(z), std::move(rad));
}

}  // namespace

ComplexDisk IntPoly::eval_disk(const ComplexDisk& x, long prec) const {
  if (is_zero()) return ComplexDisk::exact(BigComplex{BigFloat(prec), BigFloat(prec)});
  ComplexDisk acc = coeff_disk(c_.back(), prec);
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    acc = ComplexDisk::mul(acc, x, prec);
    acc = ComplexDisk::add(acc, coeff_disk(*it, prec), prec);
  }
  return acc;
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Int> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw domain_error("IntPoly: division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) throw domain_error("IntPoly: inexact division (degree)");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
  for (long k = degree() - d.degree(); k >= 0; --k) {
    Int& top = rem[static_cast<size_t>(k + d.degree())];
    if (sgn(top) == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    if (sgn(r) != 0) throw domain_error("IntPoly: inexact division (leading)");
    quot[static_cast<size_t>(k)] = q;
    for (long j = 0; j <= d.degree(); ++j)
      mpz_submul(rem[static_cast<size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                 d.c_[static_cast<size_t>(j)].get_mpz_t());
  }
  for (const auto& v : rem)
    if (sgn(v) != 0) throw domain_error("IntPoly: inexact division (remainder)");
  return IntPoly(std::move(quot));
}

long IntPoly::max_coeff_bits() const {
  long m = 0;
  for (const auto& v : c_) m = std::max(m, bit_length(v));
  return m;
}

IntPoly pseudo_rem_signed(const IntPoly& a, const IntPoly& b) {
  // Sparse pseudo-division: lc(b)^s a = q b + r with one scaling per
  // eliminated coefficient. The chain logic needs r to carry the sign of the
  // true remainder rem(a, b) = r / lc(b)^s, so flip when the factor is
  // negative.
  if (b.is_zero()) throw domain_error("pseudo_rem: zero divisor");
  long delta = a.degree() - b.degree();
  if (delta < 0) return a;
  std::vector<Int> rem = a.coeffs();
  const Int& lead = b.leading();
  long scalings = 0;
  for (long k = delta; k >= 0; --k) {
    Int top = rem[static_cast<size_t>(k + b.degree())];
    if (sgn(top) != 0) {
      for (auto& v : rem) v *= lead;
      ++scalings;
      // scaled top is top*lead; subtracting top * x^k * b cancels it exactly
      for (long j = 0; j <= b.degree(); ++j)
        mpz_submul(rem[static_cast<size_t>(k + j)].get_mpz_t(), top.get_mpz_t(),
                   b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    }
    rem[static_cast<size_t>(k + b.degree())] = 0;
  }
  IntPoly r{std::move(rem)};
  if (sgn(lead) < 0 && (scalings % 2) != 0) r.negate();
  return r;
}

IntPoly int_poly_gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem_signed(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

}  // namespace darcais
