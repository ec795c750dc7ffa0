#include "darcais/eta_apps.hpp"

#include <mutex>

namespace darcais {

const Rat& CoeffTable::at(long n) const {
  if (n < start || n > last())
    throw domain_error("CoeffTable '" + label + "': index " + std::to_string(n) +
                       " out of range");
  return values[static_cast<size_t>(n - start)];
}

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli{Rat(1)};
}  // namespace

Rat bernoulli(long k) {
  if (k < 0) throw domain_error("bernoulli: negative index");
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{j<=m} C(m+1, j) B_j = 0 pins B_m from the earlier ones
  while (static_cast<long>(g_bernoulli.size()) <= k) {
    long m = static_cast<long>(g_bernoulli.size());
    Rat acc(0);
    for (long j = 0; j < m; ++j)
      acc += Rat(binomial(Int(m + 1), static_cast<unsigned long>(j))) * g_bernoulli[static_cast<size_t>(j)];
    g_bernoulli.push_back(-acc / Rat(m + 1));
  }
  return g_bernoulli[static_cast<size_t>(k)];
}

CoeffTable eisenstein_coeffs(long k, long n_max) {
  if (k < 2 || k % 2 != 0) throw domain_error("eisenstein_coeffs: k must be even and >= 2");
  if (n_max < 0) throw domain_error("eisenstein_coeffs: negative horizon");
  Rat factor = Rat(-2 * k) / bernoulli(k);
  CoeffTable t;
  t.label = "E" + std::to_string(k);
  t.start = 0;
  t.values.push_back(Rat(1));
  for (long n = 1; n <= n_max; ++n) t.values.push_back(factor * sigma_k(n, k - 1));
  return t;
}

CoeffTable eta_power_coeffs(const PolySequence& seq, long r, long n_max) {
  if (n_max < 0) throw domain_error("eta_power_coeffs: negative horizon");
  if (seq.g().name() != "sigma" || seq.h().name() != "id")
    throw domain_error("eta_power_coeffs: needs the sigma/id sequence");
  CoeffTable t;
  t.label = "eta^" + std::to_string(r);
  t.start = 0;
  for (long n = 0; n <= n_max; ++n) t.values.push_back(seq.eval(n, Rat(-r)));
  return t;
}

CoeffTable eta_power_coeffs(long r, long n_max) {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), n_max);
  return eta_power_coeffs(seq, r, n_max);
}

CoeffTable e4_reciprocal_coeffs(const PolySequence& seq, long n_max) {
  if (n_max < 0) throw domain_error("e4_reciprocal_coeffs: negative horizon");
  if (seq.g().name() != "sigma3" || seq.h().name() != "one")
    throw domain_error("e4_reciprocal_coeffs: needs the sigma3/one sequence");
  CoeffTable t;
  t.label = "1/E4";
  t.start = 0;
  for (long n = 0; n <= n_max; ++n) {
    Rat beta = seq.eval(n, Rat(-240));
    if (!beta.is_integer())
      throw domain_error("e4_reciprocal_coeffs: beta_" + std::to_string(n) + " not an integer");
    if (n == 0 && beta != Rat(1))
      throw domain_error("e4_reciprocal_coeffs: beta_0 != 1");
    if (n >= 1 && !(beta / Rat(240)).is_integer())
      throw domain_error("e4_reciprocal_coeffs: 240 does not divide beta_" + std::to_string(n));
    int expected_sign = n % 2 == 0 ? 1 : -1;
    if (beta.sign() != expected_sign)
      throw domain_error("e4_reciprocal_coeffs: sign of beta_" + std::to_string(n) +
                         " does not alternate");
    t.values.push_back(beta);
  }
  return t;
}

CoeffTable e4_reciprocal_coeffs(long n_max) {
  PolySequence seq = build_sequence(ArithFn::sigma3(), ArithFn::one(), n_max);
  return e4_reciprocal_coeffs(seq, n_max);
}

Rat nonvanishing_threshold(long n, const KappaCertificate& cert) {
  if (n < 1) throw domain_error("nonvanishing_threshold: n must be >= 1");
  return cert.kappa * Rat(n - 1);
}

SandwichReport beta_sandwich(const CoeffTable& betas, long n_max, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw domain_error("beta_sandwich: need lo < hi");
  if (betas.last() < n_max) throw domain_error("beta_sandwich: table too short");
  SandwichReport rep;
  for (long n = 1; n <= n_max; ++n) {
    SandwichRow row;
    row.n = n;
    row.lo_pow = lo.pow(n - 1);
    row.hi_pow = hi.pow(n - 1);
    Rat beta = betas.at(n);
    row.value = (n % 2 == 0 ? beta : -beta) / Rat(240);
    row.pass = row.lo_pow <= row.value && row.value <= row.hi_pow;
    row.norm_lo = (beta / (Rat(240) * row.lo_pow)).decimal(8);
    row.norm_hi = (beta / (Rat(240) * row.hi_pow)).decimal(8);
    if (!row.pass && rep.first_failure < 0) rep.first_failure = n;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SandwichReport beta_sandwich(long n_max, const Rat& lo, const Rat& hi) {
  return beta_sandwich(e4_reciprocal_coeffs(n_max), n_max, lo, hi);
}

std::vector<GrowthRatioFailure> beta_growth_ratios(long n_max) {
  if (n_max < 2) throw domain_error("beta_growth_ratios: need N >= 2");
  CoeffTable betas = e4_reciprocal_coeffs(n_max);
  const Rat eps1(1, 25), eps2(1, 982);
  const Rat b1 = betas.at(1);  // -240
  std::vector<GrowthRatioFailure> failures;
  for (long n = 2; n <= n_max; ++n) {
    const Rat& bn = betas.at(n);
    const Rat& bm = betas.at(n - 1);
    Rat prod = (b1 * bm).abs();
    auto fail = [&](int family) { failures.push_back({n, family}); };
    if (!(Rat(1, 2) * prod < bn.abs() && bn.abs() < Rat(3, 2) * prod)) fail(1);
    if (!((bn - b1 * bm).abs() < eps1 * prod)) fail(2);
    if (!((Rat(1) - eps1) * prod < bn.abs() && bn.abs() < (Rat(1) + eps1) * prod)) fail(3);
    if (!((bn - (b1 + Rat(9)) * bm).abs() < eps2 * prod)) fail(4);
    Rat lo5 = (Rat(231) + eps2 * b1).abs() * bm.abs();
    Rat hi5 = (Rat(231) - eps2 * b1).abs() * bm.abs();
    if (!(lo5 < bn.abs() && bn.abs() < hi5)) fail(5);
  }
  return failures;
}

}  // namespace darcais
