#include <doctest.h>

#include <numeric>
#include <random>

#include "darcais/arith_fn.hpp"

using namespace darcais;

namespace {

// brute-force divisor enumeration, the independent oracle for sigma_k
Rat sigma_oracle(long n, long k) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += int_pow(Int(d), static_cast<unsigned long>(k));
  return Rat(s);
}

}  // namespace

TEST_CASE("sigma_k examples") {
  CHECK(sigma_k(1, 1) == Rat(1));
  CHECK(sigma_k(2, 3) == Rat(9));
  CHECK(sigma_k(6, 1) == sigma_oracle(6, 1));
  CHECK(sigma_k(6, 1) == Rat(12));
  CHECK_THROWS_AS(sigma_k(0, 1), domain_error);
  for (long n = 1; n <= 60; ++n)
    for (long k : {0L, 1L, 2L, 3L}) CHECK(sigma_k(n, k) == sigma_oracle(n, k));
}

TEST_CASE("sigma_k is multiplicative on coprime arguments") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    long m = 1 + rng() % 80, n = 1 + rng() % 80;
    if (std::gcd(m, n) != 1) continue;
    long k = rng() % 4;
    CHECK(sigma_k(m * n, k) == sigma_k(m, k) * sigma_k(n, k));
  }
}

TEST_CASE("sigma_diff values") {
  CHECK(sigma_diff(1) == Rat(0));
  CHECK(sigma_diff(2) == Rat(5));
  CHECK(sigma_diff(12) == Rat(70));
  CHECK_THROWS_AS(sigma_diff(0), domain_error);
}

TEST_CASE("sigma(n) <= (1 + ln n) n for n <= 10^4, via certified ln lower bound") {
  for (long n = 1; n <= 10000; ++n) {
    Rat bound = (Rat(1) + ln_lower_bound(n)) * Rat(n);
    CHECK(sigma_k(n, 1) <= bound);
  }
}

TEST_CASE("built-in functions and normalization checks") {
  CHECK(ArithFn::one().eval(17) == Rat(1));
  CHECK(ArithFn::id().eval(17) == Rat(17));
  CHECK(ArithFn::sigma().eval(6) == Rat(12));
  CHECK(ArithFn::sigma3().eval(2) == Rat(9));
  CHECK(ArithFn::sigma_power(0).eval(12) == Rat(6));  // divisor count
  CHECK(ArithFn::squares().eval(7) == Rat(49));
  CHECK(ArithFn::by_name("sigma_k:3").eval(2) == Rat(9));
  CHECK_THROWS_AS(ArithFn::by_name("nope"), domain_error);

  // h(0) := 0 extension
  CHECK(ArithFn::id().eval(0) == Rat(0));

  CHECK_THROWS_AS(ArithFn::custom("bad", {Rat(2), Rat(3)}, /*normalized=*/true,
                                  /*monotone_positive=*/true),
                  domain_error);
}

TEST_CASE("custom functions have a hard horizon") {
  ArithFn f = ArithFn::custom("f", {Rat(1), Rat(5), Rat(7, 2)}, true, false);
  CHECK(f.eval(3) == Rat(7, 2));
  CHECK_THROWS_AS(f.eval(4), resource_error);
  CHECK_FALSE(f.integer_valued_up_to(3));
  ArithFn g = ArithFn::custom("g", {Rat(1), Rat(5)}, true, false);
  CHECK(g.integer_valued_up_to(2));
}

TEST_CASE("monotone-positive contract names the failing index") {
  ArithFn h = ArithFn::custom("h", {Rat(1), Rat(2), Rat(1)}, true, true);
  CHECK_THROWS_WITH_AS(h.require_monotone_positive(3),
                       doctest::Contains("index 3"), domain_error);
  ArithFn z = ArithFn::custom("z", {Rat(1), Rat(0)}, true, true);
  CHECK_THROWS_WITH_AS(z.require_monotone_positive(2),
                       doctest::Contains("index 2"), domain_error);
  ArithFn ok = ArithFn::custom("ok", {Rat(1), Rat(2), Rat(2)}, true, true);
  CHECK_NOTHROW(ok.require_monotone_positive(3));
  // cached horizon: a second call must not re-walk (same result either way)
  CHECK_NOTHROW(ok.require_monotone_positive(2));
}

TEST_CASE("ln lower bound is a lower bound") {
  CHECK(ln_lower_bound(1) == Rat(0));
  // e < 3 so ln 3 > 1; and the bound never exceeds the true log
  CHECK(ln_lower_bound(3) > Rat(1));
  CHECK(ln_lower_bound(2) < Rat(6931472, 10000000));
  CHECK(ln_lower_bound(2) > Rat(6931471, 10000000));
}
