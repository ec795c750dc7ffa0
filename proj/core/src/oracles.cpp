#include "darcais/oracles.hpp"

#include "darcais/int_poly.hpp"
#include "darcais/series.hpp"

namespace darcais {
namespace oracles {

RationalPoly nekrasov_okounkov_poly(long n) {
  if (n < 0) throw domain_error("nekrasov_okounkov_poly: negative n");
  if (n > 20)
    throw resource_error("nekrasov_okounkov_poly: n = " + std::to_string(n) +
                         " beyond the n <= 20 horizon");
  RationalPoly total;
  for (const Partition& lambda : enumerate_partitions(n)) {
    // product over cells of ((h^2 - 1) + z) stays in Z[z]; divide once by
    // the common denominator prod h^2
    IntPoly prod = IntPoly::constant(Int(1));
    Int den(1);
    for (long h : hook_lengths(lambda)) {
      Int h2 = Int(h) * Int(h);
      prod = prod * IntPoly(std::vector<Int>{h2 - 1, Int(1)});
      den *= h2;
    }
    total = total + RationalPoly::from_scaled(prod, den);
  }
  if (n == 0) total = RationalPoly::constant(Rat(1));  // empty sum convention
  return total;
}

RationalPoly exp_series_poly(const ArithFn& g, long n) {
  if (n < 0) throw domain_error("exp_series_poly: negative n");
  // inner = sum_{m=1..n} g(m)/m q^m; answer = sum_j z^j [q^n] inner^j / j!
  RatSeries inner(n);
  for (long m = 1; m <= n; ++m) inner[static_cast<size_t>(m)] = g.eval(m) / Rat(m);
  std::vector<Rat> zcoeffs(static_cast<size_t>(n) + 1, Rat(0));
  RatSeries power = RatSeries::one(n);
  Rat fact(1);
  for (long j = 0; j <= n; ++j) {
    if (j > 0) {
      power = power * inner;
      fact *= Rat(j);
    }
    zcoeffs[static_cast<size_t>(j)] = power[static_cast<size_t>(n)] / fact;
  }
  return RationalPoly(std::move(zcoeffs));
}

RationalPoly reciprocal_series_poly(const ArithFn& g, long n) {
  if (n < 0) throw domain_error("reciprocal_series_poly: negative n");
  RatSeries base(n);
  for (long m = 1; m <= n; ++m) base[static_cast<size_t>(m)] = g.eval(m);
  std::vector<Rat> zcoeffs(static_cast<size_t>(n) + 1, Rat(0));
  RatSeries power = RatSeries::one(n);
  for (long j = 0; j <= n; ++j) {
    if (j > 0) power = power * base;
    zcoeffs[static_cast<size_t>(j)] = power[static_cast<size_t>(n)];
  }
  return RationalPoly(std::move(zcoeffs));
}

RationalPoly toy_closed_form(const ArithFn& h, long n) {
  if (n < 0) throw domain_error("toy_closed_form: negative n");
  if (n == 0) return RationalPoly::constant(Rat(1));
  h.require_monotone_positive(n);
  RationalPoly prod = RationalPoly::monomial(Rat(1), 1);
  Rat den = h.eval(n);
  for (long k = 1; k <= n - 1; ++k) {
    prod = prod * RationalPoly(std::vector<Rat>{h.eval(k), Rat(1)});
    den *= h.eval(k);
  }
  return prod.scaled(den.inverse());
}

RationalPoly laguerre(long n, const Rat& alpha) {
  if (n < 0) throw domain_error("laguerre: negative degree");
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  for (long k = 0; k <= n; ++k) {
    // generalized binomial C(n+alpha, n-k) = prod_{i=0..n-k-1} (n+alpha-i) / (n-k)!
    Rat b(1);
    for (long i = 0; i < n - k; ++i) b *= (Rat(n) + alpha - Rat(i));
    b /= Rat(factorial(static_cast<unsigned long>(n - k)));
    Rat term = b / Rat(factorial(static_cast<unsigned long>(k)));
    if (k % 2 != 0) term = -term;
    c[static_cast<size_t>(k)] = term;
  }
  return RationalPoly(std::move(c));
}

RationalPoly chebyshev_u(long n) {
  if (n < 0) throw domain_error("chebyshev_u: negative degree");
  RationalPoly u0 = RationalPoly::constant(Rat(1));
  if (n == 0) return u0;
  RationalPoly u1 = RationalPoly::monomial(Rat(2), 1);
  RationalPoly two_x = u1;
  for (long k = 1; k < n; ++k) {
    RationalPoly next = two_x * u1 - u0;
    u0 = std::move(u1);
    u1 = std::move(next);
  }
  return u1;
}

RationalPoly chebyshev_u_closed_form(long n) {
  if (n < 0) throw domain_error("chebyshev_u: negative degree");
  // U_n(x) = sum_{k=0..n/2} (-1)^k C(n-k, k) (2x)^(n-2k)
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  for (long k = 0; 2 * k <= n; ++k) {
    Rat term(Int(binomial(Int(n - k), static_cast<unsigned long>(k)) *
                 int_pow(Int(2), static_cast<unsigned long>(n - 2 * k))));
    if (k % 2 != 0) term = -term;
    c[static_cast<size_t>(n - 2 * k)] = term;
  }
  return RationalPoly(std::move(c));
}

}  // namespace oracles
}  // namespace darcais
