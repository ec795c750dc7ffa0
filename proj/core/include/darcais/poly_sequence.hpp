#pragma once

#include <deque>
#include <memory>
#include <mutex>

#include "darcais/arith_fn.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/rational_poly.hpp"

namespace darcais {

/// The sequence P_0, P_1, ... attached to (g, h):
///
///   P_0 = 1,   P_n(x) = (x / h(n)) * sum_{k=1..n} g(k) P_{n-k}(x).
///
/// Entries are exact. Internally each P_n is kept as an integer polynomial
/// over a common denominator (for integer-valued g and h that denominator is
/// just h(1)...h(n), and no gcd is ever taken while building); the reduced
/// rational form is materialized on demand and cached. Extending the
/// sequence appends entries and never mutates existing ones.
class PolySequence {
public:
  PolySequence(ArithFn g, ArithFn h, long n_max);

  const ArithFn& g() const { return g_; }
  const ArithFn& h() const { return h_; }
  long max_n() const;

  void extend(long n_max);

  /// P_n in reduced rational form (cached).
  const RationalPoly& poly(long n) const;
  /// Exact P_n(x).
  Rat eval(long n, const Rat& x) const;
  /// Certified enclosure of P_n(x) for complex x.
  ComplexDisk eval_complex(long n, const ComplexDisk& x, long prec) const;
  /// Scaled view: P_n = numerator / denominator with integer coefficients.
  const IntPoly& scaled_numerator(long n) const;
  const Int& scaled_denominator(long n) const;

  /// lead(P_n) = 1 / (h(1)...h(n)); exposed for the degree/leading-law checks.
  Rat leading_coefficient(long n) const;

private:
  void build_to(long n_max);
  void check_index(long n) const;

  ArithFn g_, h_;
  bool integer_fast_ = false;

  // geometry is append-only; deques keep references stable across extension
  std::deque<IntPoly> scaled_;
  std::deque<Int> denom_;
  std::deque<Int> g_num_, g_den_;  // g(k) cached, 1-based at index k-1
  std::deque<Int> h_num_, h_den_;  // h(n) cached, 1-based at index n-1
  mutable std::deque<std::shared_ptr<const RationalPoly>> reduced_;
  mutable std::mutex mu_;
};

/// Builds P_0..P_N for (g, h). g must be normalized (g(1) = 1); h must be
/// monotone positive up to N, checked eagerly with the offending index named.
PolySequence build_sequence(ArithFn g, ArithFn h, long n_max);

}  // namespace darcais
