#pragma once

#include <string>
#include <vector>

#include "darcais/kappa.hpp"
#include "darcais/poly_sequence.hpp"

namespace darcais {

/// Labeled coefficient column: entries at indices start, start+1, ...
struct CoeffTable {
  std::string label;
  long start = 0;
  std::vector<Rat> values;

  const Rat& at(long n) const;
  long last() const { return start + static_cast<long>(values.size()) - 1; }
};

/// Exact Bernoulli number B_k (B_1 = -1/2 convention), memoized.
Rat bernoulli(long k);

/// q-expansion of the weight-k Eisenstein series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
/// k must be even and >= 2 (k = 2 is accepted but is the quasimodular case).
CoeffTable eisenstein_coeffs(long k, long n_max);

/// Coefficients a_n(r) of prod (1 - q^m)^r: a_n(r) = P_n^{sigma,id}(-r).
CoeffTable eta_power_coeffs(long r, long n_max);
CoeffTable eta_power_coeffs(const PolySequence& sigma_id_seq, long r, long n_max);

/// Coefficients of 1 / E_4: beta_n = P_n^{sigma3,one}(-240). Asserts
/// beta_0 = 1, 240 | beta_n for n >= 1, and strict sign alternation.
CoeffTable e4_reciprocal_coeffs(long n_max);
CoeffTable e4_reciprocal_coeffs(const PolySequence& sigma3_one_seq, long n_max);

/// Certified non-vanishing radius for the n-th coefficient as a function of
/// the power r: a_n(r) != 0 whenever |r| > kappa (n-1).
Rat nonvanishing_threshold(long n, const KappaCertificate& cert);

struct SandwichRow {
  long n = 0;
  Rat lo_pow, value, hi_pow;   // lo^(n-1), (-1)^n beta_n / 240, hi^(n-1)
  std::string norm_lo, norm_hi;  // normalized columns, 8 decimals
  bool pass = false;
};

struct SandwichReport {
  std::vector<SandwichRow> rows;
  long first_failure = -1;  // -1: all pass
  bool all_pass() const { return first_failure < 0; }
};

/// Exact check lo^(n-1) <= (-1)^n beta_n / 240 <= hi^(n-1) for 1 <= n <= N,
/// with the normalized columns beta_n / (240 lo^(n-1)) and
/// beta_n / (240 hi^(n-1)) rendered at 8 decimals, round-half-even.
SandwichReport beta_sandwich(long n_max, const Rat& lo, const Rat& hi);
SandwichReport beta_sandwich(const CoeffTable& betas, long n_max, const Rat& lo, const Rat& hi);

struct GrowthRatioFailure {
  long n = 0;
  int family = 0;  // 1..5
};

/// The five displayed inequality families for the 1/E4 coefficients at
/// eps1 = 1/25, eps2 = 1/982, checked exactly for 2 <= n <= N:
///   1:  (1/2)|b1 b_{n-1}|  <  |b_n|  <  (3/2)|b1 b_{n-1}|
///   2:  |b_n - b1 b_{n-1}|  <  eps1 |b1 b_{n-1}|
///   3:  (1 - eps1)|b1 b_{n-1}|  <  |b_n|  <  (1 + eps1)|b1 b_{n-1}|
///   4:  |b_n - (b1 + 9) b_{n-1}|  <  eps2 |b1 b_{n-1}|
///   5:  |231 + eps2 b1| |b_{n-1}|  <  |b_n|  <  |231 - eps2 b1| |b_{n-1}|
std::vector<GrowthRatioFailure> beta_growth_ratios(long n_max);

}  // namespace darcais
