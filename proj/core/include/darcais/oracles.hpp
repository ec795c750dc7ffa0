#pragma once

#include "darcais/arith_fn.hpp"
#include "darcais/partitions.hpp"
#include "darcais/rational_poly.hpp"

namespace darcais {

/// Independent routes to the same polynomials the recurrence engine builds.
/// Everything here is ground truth for tests: none of it calls into
/// PolySequence.
namespace oracles {

/// Hook-length partition sum: sum over partitions of n of
/// prod over hooks of (1 + (z-1)/h^2), expanded exactly. Equals the
/// sigma/id recurrence polynomial. Guarded at n <= 20.
RationalPoly nekrasov_okounkov_poly(long n);

/// Coefficient of q^n in exp(z * sum_m g(m) q^m / m), exact in z.
RationalPoly exp_series_poly(const ArithFn& g, long n);

/// Coefficient of q^n in 1 / (1 - z * sum_m g(m) q^m), exact in z.
RationalPoly reciprocal_series_poly(const ArithFn& g, long n);

/// Closed form for g = 1: x (x + h(1)) ... (x + h(n-1)) / (h(1) ... h(n)).
RationalPoly toy_closed_form(const ArithFn& h, long n);

/// Associated Laguerre polynomial by its defining sum:
/// sum_{k=0..n} C(n+alpha, n-k) (-x)^k / k!.
RationalPoly laguerre(long n, const Rat& alpha);

/// Chebyshev polynomial of the second kind via the three-term recurrence.
RationalPoly chebyshev_u(long n);
/// Same polynomial by the explicit sum formula; the recurrence/series
/// equivalence is itself a test.
RationalPoly chebyshev_u_closed_form(long n);

}  // namespace oracles

}  // namespace darcais
