#include "darcais/poly_sequence.hpp"

namespace darcais {

PolySequence::PolySequence(ArithFn g, ArithFn h, long n_max)
    : g_(std::move(g)), h_(std::move(h)) {
  if (n_max < 0) throw domain_error("PolySequence: negative horizon");
  if (!g_.is_normalized())
    throw domain_error("PolySequence: g ('" + g_.name() + "') must be normalized");
  scaled_.push_back(IntPoly::constant(Int(1)));
  denom_.push_back(Int(1));
  reduced_.push_back(nullptr);
  integer_fast_ = true;  // re-evaluated as the horizon grows
  build_to(n_max);
}

long PolySequence::max_n() const {
  std::lock_guard lock(mu_);
  return static_cast<long>(scaled_.size()) - 1;
}

void PolySequence::extend(long n_max) { build_to(n_max); }

void PolySequence::check_index(long n) const {
  if (n < 0 || static_cast<size_t>(n) >= scaled_.size())
    throw domain_error("PolySequence: index " + std::to_string(n) + " not built");
}

void PolySequence::build_to(long n_max) {
  std::lock_guard lock(mu_);
  long have = static_cast<long>(scaled_.size()) - 1;
  if (n_max <= have) return;

  h_.require_monotone_positive(n_max);  // names the offending index
  for (long k = have + 1; k <= n_max; ++k) {
    Rat gk = g_.eval(k);
    g_num_.push_back(gk.num());
    g_den_.push_back(gk.den());
    Rat hk = h_.eval(k);
    h_num_.push_back(hk.num());
    h_den_.push_back(hk.den());
    if (!gk.is_integer() || !hk.is_integer()) integer_fast_ = false;
  }

  for (long n = have + 1; n <= n_max; ++n) {
    IntPoly acc;
    Int big_den;
    if (integer_fast_) {
      // weight of P_{n-k} is g(k) * h(n-k+1) ... h(n-1); accumulate the
      // product as k grows so each step is one integer multiply
      Int running(1);
      for (long k = 1; k <= n; ++k) {
        Int w = g_num_[static_cast<size_t>(k - 1)] * running;
        acc.axpy(w, scaled_[static_cast<size_t>(n - k)]);
        if (k < n) running *= h_num_[static_cast<size_t>(n - k - 1)];
      }
      big_den = denom_[static_cast<size_t>(n - 1)] * h_num_[static_cast<size_t>(n - 1)];
    } else {
      // common denominator M = lcm_k( den(g(k)) * D_{n-k} )
      Int M(1);
      for (long k = 1; k <= n; ++k) {
        Int t = g_den_[static_cast<size_t>(k - 1)] * denom_[static_cast<size_t>(n - k)];
        mpz_lcm(M.get_mpz_t(), M.get_mpz_t(), t.get_mpz_t());
      }
      for (long k = 1; k <= n; ++k) {
        Int t = g_den_[static_cast<size_t>(k - 1)] * denom_[static_cast<size_t>(n - k)];
        Int w = g_num_[static_cast<size_t>(k - 1)] * (M / t);
        acc.axpy(w, scaled_[static_cast<size_t>(n - k)]);
      }
      // P_n = x * (hq/hp) * acc / M
      if (h_den_[static_cast<size_t>(n - 1)] != 1)
        acc.scale_by(h_den_[static_cast<size_t>(n - 1)]);
      big_den = h_num_[static_cast<size_t>(n - 1)] * M;
      // keep the scaled representation small
      Int c = acc.content();
      if (sgn(c) != 0) {
        Int shared;
        mpz_gcd(shared.get_mpz_t(), c.get_mpz_t(), big_den.get_mpz_t());
        if (shared != 1) {
          acc.divexact_by(shared);
          mpz_divexact(big_den.get_mpz_t(), big_den.get_mpz_t(), shared.get_mpz_t());
        }
      }
    }
    acc.shift_up();  // multiply by x
    scaled_.push_back(std::move(acc));
    denom_.push_back(std::move(big_den));
    reduced_.push_back(nullptr);
  }
}

const RationalPoly& PolySequence::poly(long n) const {
  std::lock_guard lock(mu_);
  check_index(n);
  auto& slot = reduced_[static_cast<size_t>(n)];
  if (!slot)
    slot = std::make_shared<const RationalPoly>(
        RationalPoly::from_scaled(scaled_[static_cast<size_t>(n)], denom_[static_cast<size_t>(n)]));
  return *slot;
}

Rat PolySequence::eval(long n, const Rat& x) const {
  std::lock_guard lock(mu_);
  check_index(n);
  Rat v = scaled_[static_cast<size_t>(n)].eval(x);
  return v / Rat(denom_[static_cast<size_t>(n)]);
}

ComplexDisk PolySequence::eval_complex(long n, const ComplexDisk& x, long prec) const {
  if (prec < 53) throw domain_error("eval_complex: precision must be >= 53");
  std::lock_guard lock(mu_);
  check_index(n);
  ComplexDisk v = scaled_[static_cast<size_t>(n)].eval_disk(x, prec);
  return ComplexDisk::scale(v, Rat(Int(1), denom_[static_cast<size_t>(n)]), prec);
}

const IntPoly& PolySequence::scaled_numerator(long n) const {
  std::lock_guard lock(mu_);
  check_index(n);
  return scaled_[static_cast<size_t>(n)];
}

const Int& PolySequence::scaled_denominator(long n) const {
  std::lock_guard lock(mu_);
  check_index(n);
  return denom_[static_cast<size_t>(n)];
}

Rat PolySequence::leading_coefficient(long n) const {
  std::lock_guard lock(mu_);
  check_index(n);
  if (scaled_[static_cast<size_t>(n)].is_zero()) return Rat(0);
  return Rat(scaled_[static_cast<size_t>(n)].leading(), denom_[static_cast<size_t>(n)]);
}

PolySequence build_sequence(ArithFn g, ArithFn h, long n_max) {
  return PolySequence(std::move(g), std::move(h), n_max);
}

}  // namespace darcais
