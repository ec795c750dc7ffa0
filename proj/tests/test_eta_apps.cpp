#include <doctest.h>

#include "darcais/eta_apps.hpp"
#include "darcais/series.hpp"
#include "darcais/tables.hpp"

using namespace darcais;

namespace {

// direct expansion of prod_{m<=N} (1 - q^m)^r for r >= 0, integer series
std::vector<Rat> euler_product_pow(long r, long n_max) {
  std::vector<Rat> ser(static_cast<size_t>(n_max) + 1, Rat(0));
  ser[0] = Rat(1);
  for (long m = 1; m <= n_max; ++m)
    for (long rep = 0; rep < r; ++rep)
      for (long i = n_max; i >= m; --i)
        ser[static_cast<size_t>(i)] -= ser[static_cast<size_t>(i - m)];
  return ser;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(6) == Rat(1, 42));
  CHECK(bernoulli(8) == Rat(-1, 30));
  CHECK(bernoulli(12) == Rat(-691, 2730));
  CHECK(bernoulli(3) == Rat(0));
}

TEST_CASE("Eisenstein coefficients") {
  CoeffTable e4 = eisenstein_coeffs(4, 2);
  CHECK(e4.at(0) == Rat(1));
  CHECK(e4.at(1) == Rat(240));
  CHECK(e4.at(2) == Rat(2160));
  CoeffTable e6 = eisenstein_coeffs(6, 1);
  CHECK(e6.at(1) == Rat(-504));
  CHECK(eisenstein_coeffs(4, 0).values.size() == 1);
  CoeffTable e2 = eisenstein_coeffs(2, 1);  // quasimodular but accepted
  CHECK(e2.at(1) == Rat(-24));
  CHECK_THROWS_AS(eisenstein_coeffs(5, 3), domain_error);
}

TEST_CASE("eta power coefficients") {
  CoeffTable pent = eta_power_coeffs(1, 5);
  std::vector<Rat> expect{Rat(1), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(1)};
  CHECK(pent.values == expect);

  CoeffTable zero = eta_power_coeffs(0, 4);
  CHECK(zero.at(0) == Rat(1));
  for (long n = 1; n <= 4; ++n) CHECK(zero.at(n) == Rat(0));

  // r-th power agrees with the direct Euler-product expansion
  for (long r : {1L, 2L, 5L, 24L, 30L}) {
    CoeffTable t = eta_power_coeffs(r, 18);
    auto direct = euler_product_pow(r, 18);
    for (long n = 0; n <= 18; ++n) CHECK(t.at(n) == direct[static_cast<size_t>(n)]);
  }
}

TEST_CASE("tau values via the -24th power") {
  // Delta = q prod (1-q^m)^24: tau(n) = a_{n-1}(24)
  CoeffTable t = eta_power_coeffs(24, 19);
  auto direct = euler_product_pow(24, 19);
  for (long n = 0; n <= 19; ++n) CHECK(t.at(n) == direct[static_cast<size_t>(n)]);
  CHECK(t.at(1) == Rat(-24));       // tau(2)
  CHECK(t.at(2) == Rat(252));       // tau(3)
  CHECK(t.at(4) == Rat(4830));      // tau(5)
  CHECK(t.at(5) == t.at(1) * t.at(2));  // tau(6) = tau(2) tau(3)
}

TEST_CASE("1/E4 coefficients: exact integers, alternation, divisibility") {
  CoeffTable betas = e4_reciprocal_coeffs(10);
  CHECK(betas.at(0) == Rat(1));
  CHECK(betas.at(1) == Rat(-240));
  CHECK(betas.at(2) / Rat(240) == Rat(231));
  CHECK(betas.at(10) / Rat(240) == Rat(Int("1857705425589167301906")));

  // independent oracle: formal inverse of the E4 series
  CoeffTable e4 = eisenstein_coeffs(4, 10);
  RatSeries s(10);
  for (long n = 0; n <= 10; ++n) s[static_cast<size_t>(n)] = e4.at(n);
  RatSeries inv = s.inverse();
  for (long n = 0; n <= 10; ++n) CHECK(inv[static_cast<size_t>(n)] == betas.at(n));
}

TEST_CASE("series inversion matches the recurrence route out to N = 60") {
  CoeffTable betas = e4_reciprocal_coeffs(60);
  CoeffTable e4 = eisenstein_coeffs(4, 60);
  RatSeries s(60);
  for (long n = 0; n <= 60; ++n) s[static_cast<size_t>(n)] = e4.at(n);
  RatSeries inv = s.inverse();
  for (long n = 0; n <= 60; ++n) CHECK(inv[static_cast<size_t>(n)] == betas.at(n));
}

TEST_CASE("beta sandwich and the normalized table") {
  SandwichReport rep = beta_sandwich(10, Rat(230), Rat(232));
  CHECK(rep.all_pass());
  CHECK(rep.rows[0].value == Rat(1));  // n = 1: (-1)^1 beta_1/240; exponent 0 on both sides
  CHECK(rep.rows[0].lo_pow == Rat(1));
  CHECK(rep.rows[1].norm_lo == "1.00434783");
  CHECK(rep.rows[9].norm_lo == "1.03139810");
  CHECK(rep.rows[9].norm_hi == "0.95408043");

  // the tighter bounds from the 1/982 epsilon
  SandwichReport tight = beta_sandwich(10, Rat::parse("230.7648"), Rat::parse("231.2353"));
  CHECK(tight.all_pass());

  // 231^(n-1) stops being a lower bound at n = 3 (231^2 = 53361 > 53308)
  SandwichReport fail = beta_sandwich(6, Rat(231), Rat(232));
  CHECK_FALSE(fail.all_pass());
  CHECK(fail.first_failure == 3);
}

TEST_CASE("the five displayed inequality families hold through N = 12") {
  auto failures = beta_growth_ratios(12);
  CHECK(failures.empty());
}

TEST_CASE("family-by-family spot values at n = 2") {
  CoeffTable betas = e4_reciprocal_coeffs(2);
  Rat b1 = betas.at(1), b2 = betas.at(2);
  // family 1: 120*240 < |b2| < 360*240
  CHECK(Rat(120 * 240) < b2.abs());
  CHECK(b2.abs() < Rat(360 * 240));
  // family 5: |231 + eps2 b1| < 231 < |231 - eps2 b1|
  Rat eps2(1, 982);
  CHECK((Rat(231) + eps2 * b1).abs() < Rat(231));
  CHECK(Rat(231) < (Rat(231) - eps2 * b1).abs());
}

TEST_CASE("nonvanishing thresholds") {
  KappaCertificate cert = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                                     Rat(2, 11), Rat(3, 14));
  CHECK(nonvanishing_threshold(2, cert) == Rat(119, 11));
  CHECK(nonvanishing_threshold(1, cert) == Rat(0));
  KappaCertificate c2 = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2, 12),
                                   Rat(18289, 100000), Rat(217, 1000));
  // 5th coefficient: threshold 4 kappa <= 4 * 10.815
  CHECK(nonvanishing_threshold(5, c2) <= Rat(4326, 100));
}

TEST_CASE("reference tables regenerate byte-for-byte") {
  TableResult t1 = make_table(1, 10);
  CHECK(t1.matches);
  TableResult t2 = make_table(2, 10);
  CHECK(t2.matches);
  TableResult t3 = make_table(3, 0);
  CHECK(t3.matches);
  TableResult t4 = make_table(4, 14);
  CHECK(t4.matches);
  TableResult t5 = make_table(5, 6, 2);  // small slice; the full run is acceptance's job
  CHECK(t5.matches);
  CHECK(t5.tsv.find("-20.61187") != std::string::npos);
}
