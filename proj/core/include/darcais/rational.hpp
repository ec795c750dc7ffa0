#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darcais {

/// Arbitrary-precision integer. All exact computations bottom out here.
using Int = mpz_class;

Int int_pow(const Int& base, unsigned long e);
Int binomial(const Int& n, unsigned long k);
Int factorial(unsigned long n);
/// Number of bits in |v| (0 for v = 0).
long bit_length(const Int& v);
std::string to_string(const Int& v);

/// Thrown when an argument leaves an operation's mathematical domain.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a request exceeds a guarded horizon (partition counts,
/// custom-function tables, precision caps).
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class RoundMode {
  half_even,  // ties to even last digit
  floor,      // toward -inf
  ceil,       // toward +inf
};

/// Exact rational number, always in lowest terms with positive denominator.
/// Arithmetic never rounds.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long v) : q_(v) {}  // NOLINT: intentionally implicit, mirrors integer literals
  Rat(const Int& v) : q_(v) {}
  // exact match for gmpxx expression templates (Int arithmetic results)
  template <class U>
  Rat(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}
  Rat(const Int& num, const Int& den);
  Rat(long num, long den);

  /// Parses "num", "num/den", or a plain decimal like "-12.75" (which is
  /// exact: 10^k denominators). Throws domain_error on anything else.
  static Rat parse(std::string_view s);
  /// Like parse but refuses decimal points; for interface points where a
  /// silent decimal would hide an intended exact value.
  static Rat parse_fraction_only(std::string_view s);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat abs() const;
  Rat inverse() const;
  /// Integer exponent; negative e inverts (error on zero base).
  Rat pow(long e) const;

  Int floor() const;
  Int ceil() const;

  /// "num/den", or just "num" when the value is an integer.
  std::string str() const;
  /// Fixed-point decimal with `digits` places after the point.
  std::string decimal(int digits, RoundMode mode = RoundMode::half_even) const;
  double to_double() const { return q_.get_d(); }

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;  // canonical: gmp keeps results of arithmetic reduced
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Closed rational interval [lo, hi]; the result type of every operation
/// that cannot be exact (square roots, float-derived bounds).
struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  RatInterval(Rat point) : lo(point), hi(point) {}
  RatInterval(Rat l, Rat h);

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool strictly_below(const Rat& v) const { return hi < v; }
  bool strictly_above(const Rat& v) const { return lo > v; }
};

/// Certified enclosure of sqrt(v) with hi - lo <= tol; endpoints verified
/// exactly (lo^2 <= v <= hi^2).
RatInterval sqrt_enclosure(const Rat& v, const Rat& tol = Rat(1, 1000000000000L));

}  // namespace darcais
