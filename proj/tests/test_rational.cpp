#include <doctest.h>

#include <random>

#include "darcais/rational.hpp"

using namespace darcais;

TEST_CASE("Rat is canonical: lowest terms, positive denominator") {
  Rat a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat(10, 5).is_integer());
  CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("Rat arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK((-a).str() == "-1/3");
  CHECK(Rat(-7, 2).abs() == Rat(7, 2));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK_THROWS_AS(Rat(0).inverse(), domain_error);
}

TEST_CASE("Rat round-trips on randomized big operands") {
  // (a/b + c/d) - c/d == a/b, with operands far beyond word size
  std::mt19937_64 rng(20240811);
  auto big = [&rng]() {
    Int v(1);
    for (int i = 0; i < 4; ++i) v = v * static_cast<long>(rng() >> 16 | 1);
    return rng() & 1 ? v : Int(-v);
  };
  for (int i = 0; i < 200; ++i) {
    Rat x(big(), ::abs(big()) + 1);
    Rat y(big(), ::abs(big()) + 1);
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
  }
}

TEST_CASE("Rat parsing") {
  CHECK(Rat::parse("3/14") == Rat(3, 14));
  CHECK(Rat::parse("-24") == Rat(-24));
  CHECK(Rat::parse("0.18289") == Rat(18289, 100000));
  CHECK(Rat::parse("230.7648") == Rat(2307648, 10000));
  CHECK_THROWS_AS(Rat::parse("x"), domain_error);
  CHECK_THROWS_AS(Rat::parse("1/0"), domain_error);
  CHECK_THROWS_AS(Rat::parse_fraction_only("0.5"), domain_error);
  CHECK(Rat::parse_fraction_only("2/11") == Rat(2, 11));
}

TEST_CASE("decimal rendering: round-half-even and directed modes") {
  CHECK(Rat(231, 230).decimal(8) == "1.00434783");
  CHECK(Rat(-53308, 52900).decimal(8) == "-1.00771267");
  CHECK(Rat(1, 2).decimal(0) == "0");        // ties to even
  CHECK(Rat(3, 2).decimal(0) == "2");
  CHECK(Rat(5, 2).decimal(0) == "2");
  CHECK(Rat(-1, 2).decimal(0) == "0");
  CHECK(Rat(25, 1000).decimal(2) == "0.02"); // 0.025 -> even
  CHECK(Rat(35, 1000).decimal(2) == "0.04");
  CHECK(Rat(154867000L, 14320287L).decimal(3, RoundMode::ceil) == "10.815");
  CHECK(Rat(154867000L, 14320287L).decimal(3, RoundMode::floor) == "10.814");
  CHECK(Rat(-3).decimal(5) == "-3.00000");
}

TEST_CASE("sqrt enclosure is certified") {
  RatInterval s = sqrt_enclosure(Rat(15), Rat(1, 1000000));
  CHECK(s.lo * s.lo <= Rat(15));
  CHECK(s.hi * s.hi >= Rat(15));
  CHECK(s.width() <= Rat(1, 1000000));
  CHECK(s.contains(Rat(3872983, 1000000)) );  // sqrt(15) ~ 3.8729833
  CHECK(sqrt_enclosure(Rat(0)).lo == Rat(0));
  CHECK(sqrt_enclosure(Rat(4), Rat(1, 1 << 20)).contains(Rat(2)));
  CHECK_THROWS_AS(sqrt_enclosure(Rat(-1)), domain_error);
}

TEST_CASE("Int helpers") {
  CHECK(binomial(Int(10), 2) == 45);
  CHECK(factorial(6) == 720);
  CHECK(int_pow(Int(2), 70) == Int("1180591620717411303424"));
  CHECK(bit_length(Int(0)) == 0);
  CHECK(bit_length(Int(255)) == 8);
}
