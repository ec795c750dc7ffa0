#include "darcais/rational_poly.hpp"

#include <ostream>
#include <sstream>

namespace darcais {

RationalPoly RationalPoly::constant(Rat v) {
  std::vector<Rat> c;
  if (!v.is_zero()) c.push_back(std::move(v));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::monomial(Rat coeff, long power) {
  if (coeff.is_zero()) return {};
  std::vector<Rat> c(static_cast<size_t>(power) + 1, Rat(0));
  c.back() = std::move(coeff);
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::from_scaled(const IntPoly& p, const Int& den) {
  if (sgn(den) == 0) throw domain_error("RationalPoly::from_scaled: zero denominator");
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v, den);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat RationalPoly::coeff(long k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return c_[static_cast<size_t>(k)];
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::scaled(const Rat& s) const {
  if (s.is_zero()) return {};
  std::vector<Rat> out = c_;
  for (auto& v : out) v *= s;
  return RationalPoly(std::move(out));
}

Rat RationalPoly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
  RationalPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * q + RationalPoly::constant(*it);
  return r;
}

ComplexDisk RationalPoly::eval_complex(const Rat& re, const Rat& im, long prec) const {
  return eval_complex(ComplexDisk::from_rat(re, im, prec), prec);
}

ComplexDisk RationalPoly::eval_complex(const ComplexDisk& x, long prec) const {
  if (prec < 53) throw domain_error("eval_complex: precision must be >= 53");
  auto [ip, den] = clear_denominators();
  ComplexDisk v = ip.eval_disk(x, prec);
  return ComplexDisk::scale(v, Rat(Int(1), den), prec);
}

RationalPoly RationalPoly::derivative(long order) const {
  if (order < 0) throw domain_error("derivative: negative order");
  RationalPoly p = *this;
  for (long o = 0; o < order; ++o) {
    if (p.c_.size() <= 1) return {};
    std::vector<Rat> out(p.c_.size() - 1);
    for (size_t k = 1; k < p.c_.size(); ++k) out[k - 1] = p.c_[k] * Rat(static_cast<long>(k));
    p = RationalPoly(std::move(out));
  }
  return p;
}

std::pair<IntPoly, Int> RationalPoly::clear_denominators() const {
  Int den(1);
  for (const auto& v : c_) {
    Int d = v.den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den *= d / g;
  }
  std::vector<Int> num;
  num.reserve(c_.size());
  for (const auto& v : c_) num.push_back(v.num() * (den / v.den()));
  return {IntPoly(std::move(num)), den};
}

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& a = c_[static_cast<size_t>(k)];
    if (a.is_zero()) continue;
    if (!first) os << (a.sign() > 0 ? " + " : " - ");
    else if (a.sign() < 0) os << "-";
    Rat mag = a.abs();
    bool unit = mag == Rat(1) && k > 0;
    if (!unit) os << mag.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::string RationalPoly::json() const {
  std::ostringstream os;
  os << "{\"n\": " << degree() << ", \"coeffs\": [";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << '"' << c_[i].str() << '"';
  }
  os << "]}";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.str(); }

}  // namespace darcais
