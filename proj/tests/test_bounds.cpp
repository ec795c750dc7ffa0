#include <doctest.h>

#include "darcais/growth.hpp"
#include "darcais/kappa.hpp"

using namespace darcais;

TEST_CASE("series terms") {
  ArithFn sig = ArithFn::sigma();
  CHECK(series_term(sig, SeriesKind::G1, 1) == Rat(3));
  CHECK(series_term(sig, SeriesKind::G2, 2) == Rat(5));   // |4 - 9|
  CHECK(series_term(sig, SeriesKind::G2, 12) == Rat(70));
  CHECK_THROWS_AS(series_term(sig, SeriesKind::G2, 1), domain_error);
}

TEST_CASE("majorant construction verifies the tail across the horizon") {
  // a linear tail 4(k+1) cannot dominate |sigma(k+1) - 3 sigma(k)| (70 at k=12)
  CHECK_THROWS_WITH_AS(
      make_majorant(ArithFn::sigma(), SeriesKind::G2, Rat(4), 1, 1, 2, 256),
      doctest::Contains("k = "), domain_error);
  CHECK_NOTHROW(make_majorant(ArithFn::sigma(), SeriesKind::G2, Rat(4), 2, 2, 8, 400));
  CHECK_NOTHROW(make_majorant(ArithFn::sigma3(), SeriesKind::G2, Rat(90), 3, 3, 5, 400));
}

TEST_CASE("majorant values: the exact rationals the certificates rest on") {
  Majorant sig_g2 = builtin_majorant("sigma", SeriesKind::G2);  // head through k=7
  CHECK(majorant_eval(sig_g2, Rat(2, 11)) ==
        Rat(Int("3043993780"), Int("14206147659")));
  CHECK(majorant_eval(sig_g2, Rat(2, 11)) < Rat(3, 14));

  Majorant one_g2 = builtin_majorant("one", SeriesKind::G2);
  CHECK(majorant_eval(one_g2, Rat(1, 2)) == Rat(0));
  CHECK(majorant_eval(one_g2, Rat(9, 10)) == Rat(0));

  Majorant id_g1 = builtin_majorant("id", SeriesKind::G1);
  for (Rat T : {Rat(1, 6), Rat(2, 11), Rat(1, 3), Rat(7, 10)})
    CHECK(majorant_eval(id_g1, T) == (Rat(1) - T).pow(-2) - Rat(1));
  Majorant id_g2 = builtin_majorant("id", SeriesKind::G2);
  for (Rat T : {Rat(1, 6), Rat(1, 3), Rat(7, 10)})
    CHECK(majorant_eval(id_g2, T) == T * T * (Rat(1) - T).pow(-2));

  CHECK_THROWS_AS(majorant_eval(id_g1, Rat(1)), domain_error);
  CHECK_THROWS_AS(majorant_eval(id_g1, Rat(0)), domain_error);

  Majorant s3_g1 = builtin_majorant("sigma3", SeriesKind::G1);
  CHECK(majorant_eval(s3_g1, Rat(87, 20000)) ==
        Rat(Int("1248274072444709335238721"), Int("31446822595409952200000000")));
  Majorant s3_g2 = builtin_majorant("sigma3", SeriesKind::G2);
  CHECK(majorant_eval(s3_g2, Rat(87, 20000)) ==
        Rat(Int("25605878110865247894531439480101"),
            Int("25157458076327961760000000000000000")));
}

TEST_CASE("majorant monotonicity on a grid") {
  for (const char* name : {"sigma", "sigma3", "id"}) {
    for (SeriesKind kind : {SeriesKind::G1, SeriesKind::G2}) {
      Majorant m = builtin_majorant(name, kind);
      Rat prev(-1);
      for (long i = 1; i <= 40; ++i) {
        Rat v = majorant_eval(m, Rat(i, 41));
        CHECK(v >= prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("kappa certificates: the headline exact values") {
  // sigma, variant B at T = 2/11 with the externally fixed eps = 3/14
  KappaCertificate c = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                                  Rat(2, 11), Rat(3, 14));
  CHECK(c.kappa == Rat(119, 11));
  CHECK(c.eps_overridden);
  CHECK(c.g_bound < c.eps);

  // id, variant A: eps = exact majorant value 11/25 at T = 1/6
  KappaCertificate a = kappa_from(Variant::A, builtin_majorant("id", SeriesKind::G1), Rat(1, 6));
  CHECK(a.eps == Rat(11, 25));
  CHECK(a.kappa == Rat(75, 7));
  CHECK_FALSE(a.eps_overridden);

  KappaCertificate b = kappa_from(Variant::B, builtin_majorant("id", SeriesKind::G2), Rat(1, 3));
  CHECK(b.eps == Rat(1, 4));
  CHECK(b.kappa == Rat(20, 3));

  KappaCertificate a11 = kappa_from(Variant::A, builtin_majorant("id", SeriesKind::G1),
                                    Rat(2, 11), Rat(1, 2));
  CHECK(a11.kappa == Rat(11));

  // variant/majorant mismatch and infeasible overrides are refused
  CHECK_THROWS_AS(kappa_from(Variant::A, builtin_majorant("id", SeriesKind::G2), Rat(1, 3)),
                  domain_error);
  CHECK_THROWS_AS(kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                             Rat(2, 11), Rat(1, 5)),  // below the certified bound
                  infeasible_error);
  CHECK_THROWS_AS(kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2), Rat(10, 11)),
                  infeasible_error);
}

TEST_CASE("certificate JSON carries exact strings") {
  KappaCertificate c = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                                  Rat(2, 11), Rat(3, 14));
  std::string j = c.json();
  CHECK(j.find("\"kappa\": \"119/11\"") != std::string::npos);
  CHECK(j.find("\"T\": \"2/11\"") != std::string::npos);
  CHECK(j.find("\"g_bound\": \"3043993780/14206147659\"") != std::string::npos);
}

TEST_CASE("optimizer finds certificates at least as good as the published ones") {
  // sigma3, variant B: published optimum 539/16 (at eps = 5/21, T = 3/50)
  Majorant m = builtin_majorant("sigma3", SeriesKind::G2, 12);
  CHECK((Rat(50, 3) + Rat(9)) / (Rat(1) - Rat(5, 21)) == Rat(539, 16));
  CHECK(majorant_eval(m, Rat(3, 50)) <= Rat(5, 21));
  KappaCertificate fixed = kappa_from(Variant::B, m, Rat(3, 50), Rat(5, 21));
  CHECK(fixed.kappa == Rat(539, 16));

  KappaCertificate best = optimize_kappa(Variant::B, m);
  CHECK(best.kappa <= Rat(539, 16));
  CHECK(best.g_bound < Rat(1));

  // one, variant B: G2 == 0 forces eps = 0, kappa = 1/T + 1 decreasing in T
  KappaCertificate onecert = optimize_kappa(Variant::B, builtin_majorant("one", SeriesKind::G2));
  CHECK(onecert.eps == Rat(0));
  CHECK(onecert.kappa == onecert.T.inverse() + Rat(1));
  KappaCertificate onefixed = kappa_from(Variant::B, builtin_majorant("one", SeriesKind::G2),
                                         Rat(1, 2));
  CHECK(onefixed.kappa == Rat(3));
}

TEST_CASE("B never beats A is wrong, A never beats B on shared feasible T") {
  Majorant g1 = builtin_majorant("id", SeriesKind::G1);
  Majorant g2 = builtin_majorant("id", SeriesKind::G2);
  KappaCertificate a = optimize_kappa(Variant::A, g1);
  KappaCertificate b = optimize_kappa(Variant::B, g2);
  CHECK(b.kappa <= a.kappa);
}

TEST_CASE("lower bounds") {
  CHECK(lower_bound(Variant::A, ArithFn::sigma()).lo == Rat(12));
  CHECK(lower_bound(Variant::A, ArithFn::sigma(), Rat(1, 2)).lo == Rat(12));
  CHECK(lower_bound(Variant::A, ArithFn::sigma(), Rat(1, 4)) .lo == Rat(16));

  // (3/2) sqrt(15) + 3 ~ 8.8094750
  RatInterval b = lower_bound(Variant::B, ArithFn::sigma());
  CHECK(b.lo > Rat(88094, 10000));
  CHECK(b.hi < Rat(88095, 10000));
  CHECK(b.hi < Rat(2163, 200));  // below 10.815
  CHECK(b.width() <= Rat(1, 100000000L));

  CHECK_THROWS_AS(lower_bound(Variant::A, ArithFn::sigma(), Rat(1)), domain_error);

  // every certificate dominates its lower bound
  KappaCertificate c = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                                  Rat(2, 11), Rat(3, 14));
  CHECK(c.kappa >= lower_bound(Variant::B, ArithFn::sigma()).hi);
  KappaCertificate a75 = kappa_from(Variant::A, builtin_majorant("id", SeriesKind::G1), Rat(1, 6));
  CHECK(a75.kappa >= lower_bound(Variant::A, ArithFn::id()).hi);
}

TEST_CASE("A/B comparison chain") {
  Majorant g1 = builtin_majorant("id", SeriesKind::G1);
  Majorant g2 = builtin_majorant("id", SeriesKind::G2);
  AbComparison r = compare_a_b(g1, g2, Rat(1, 6));
  CHECK(r.eps1 == Rat(11, 25));
  CHECK(r.kappa1 == Rat(75, 7));
  CHECK(r.chain_holds);
  CHECK(r.b_not_worse);
  CHECK(r.kappa2 <= r.kappa1);
  // chain construction with the upper-end eps2 reproduces kappa1 exactly
  CHECK(r.kappa2_chain == r.kappa1);

  AbComparison s =
      compare_a_b(builtin_majorant("sigma3", SeriesKind::G1),
                  builtin_majorant("sigma3", SeriesKind::G2), Rat(87, 20000),
                  Rat(1, 25), Rat(1, 982));
  CHECK(s.kappa1 == Rat(62500, 261));
  CHECK(s.kappa2 == Rat(Int("20408906"), Int("85347")));
  CHECK(s.b_not_worse);
  CHECK(s.chain_holds);

  AbComparison one = compare_a_b(builtin_majorant("one", SeriesKind::G1),
                                 builtin_majorant("one", SeriesKind::G2), Rat(1, 4));
  CHECK(one.eps2 == Rat(0));
  CHECK(one.b_not_worse);
}

TEST_CASE("growth verification: exact spot checks at small n") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 8);
  KappaCertificate cert = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                                     Rat(2, 11), Rat(3, 14));
  GrowthOptions opts;
  opts.deltas = {Rat(1, 1000), Rat(1)};
  GrowthReport rep = verify_growth(seq, cert, 1, 8, opts);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 8 * 2 * 4 * 2);  // n, delta, angle, two checks

  // the one-function family: the B remainder is exactly zero ...
  PolySequence ones = build_sequence(ArithFn::one(), ArithFn::id(), 6);
  for (long n = 1; n <= 6; ++n) {
    Rat x(-7 * n - 3, 2);
    Rat remainder = ones.eval(n, x) -
                    (x + ones.h().eval(n - 1)) / ones.h().eval(n) * ones.eval(n - 1, x);
    CHECK(remainder == Rat(0));
  }
  // ... so any positive eps makes every B check pass with room to spare
  KappaCertificate onecert = kappa_from(Variant::B, builtin_majorant("one", SeriesKind::G2),
                                        Rat(1, 2), Rat(1, 10));
  GrowthReport onerep = verify_growth(ones, onecert, 1, 6, opts);
  CHECK(onerep.all_pass());

  // legacy two-sided bound at kappa = 15 (G1(2/15) <= 1/2 feasible)
  Majorant legacy = builtin_majorant("sigma", SeriesKind::G1);
  CHECK(majorant_eval(legacy, Rat(2, 15)) <= Rat(1, 2));
  GrowthReport lrep = verify_growth_half_sandwich(seq, Rat(15), 1, 8, opts);
  CHECK(lrep.all_pass());

  // mismatched certificate is refused
  CHECK_THROWS_AS(verify_growth(ones, cert, 1, 3, opts), domain_error);
}
