#include <doctest.h>

#include <random>

#include "darcais/oracles.hpp"
#include "darcais/poly_sequence.hpp"

using namespace darcais;
using namespace darcais::oracles;

TEST_CASE("partition enumeration: counts, order, horizon") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0].parts.empty());
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  for (long n = 0; n <= 18; ++n) {
    auto parts = enumerate_partitions(n);
    CHECK(Int(static_cast<long>(parts.size())) == partition_count(n));
    for (size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].valid());
      CHECK(parts[i].size() == n);
      if (i > 0) CHECK(parts[i - 1].parts < parts[i].parts);  // strict lexicographic
    }
  }
  CHECK_THROWS_AS(enumerate_partitions(41), resource_error);
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths({{1}}) == std::vector<long>{1});
  CHECK(hook_lengths({{2, 1}}) == std::vector<long>({3, 1, 1}));
  CHECK(hook_lengths({{2, 2}}) == std::vector<long>({3, 2, 2, 1}));
  // one hook per cell
  for (const auto& lam : enumerate_partitions(9))
    CHECK(static_cast<long>(hook_lengths(lam).size()) == lam.size());
  CHECK_THROWS_AS(hook_lengths({{1, 2}}), domain_error);
}

TEST_CASE("hook-length sum equals the sigma/id recurrence polynomials") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 12);
  CHECK(nekrasov_okounkov_poly(0) == RationalPoly::constant(Rat(1)));
  CHECK(nekrasov_okounkov_poly(1) == RationalPoly::monomial(Rat(1), 1));
  for (long n = 0; n <= 12; ++n) CHECK(nekrasov_okounkov_poly(n) == seq.poly(n));
}

TEST_CASE("exponential-series oracle equals P_n^{g,id}") {
  CHECK(exp_series_poly(ArithFn::sigma(), 1) == RationalPoly::monomial(Rat(1), 1));
  for (const char* name : {"sigma", "id", "sigma3", "one"}) {
    ArithFn g = ArithFn::by_name(name);
    PolySequence seq = build_sequence(g, ArithFn::id(), 18);
    for (long n = 0; n <= 18; ++n) CHECK(exp_series_poly(g, n) == seq.poly(n));
  }
}

TEST_CASE("reciprocal-series oracle equals P_n^{g,one}") {
  CHECK(reciprocal_series_poly(ArithFn::id(), 1) == RationalPoly::monomial(Rat(1), 1));
  CHECK(reciprocal_series_poly(ArithFn::sigma3(), 1) == RationalPoly::monomial(Rat(1), 1));
  // (id, 2) -> z(z+2)
  CHECK(reciprocal_series_poly(ArithFn::id(), 2) ==
        RationalPoly(std::vector<Rat>{Rat(0), Rat(2), Rat(1)}));
  for (const char* name : {"sigma", "id", "sigma3", "one"}) {
    ArithFn g = ArithFn::by_name(name);
    PolySequence seq = build_sequence(g, ArithFn::one(), 18);
    for (long n = 0; n <= 18; ++n) CHECK(reciprocal_series_poly(g, n) == seq.poly(n));
  }
}

TEST_CASE("toy closed form equals P_n^{1,h}") {
  CHECK(toy_closed_form(ArithFn::id(), 2) ==
        RationalPoly(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2)}));
  CHECK(toy_closed_form(ArithFn::sigma3(), 0) == RationalPoly::constant(Rat(1)));
  // h = one: x (x+1)^(n-1)
  CHECK(toy_closed_form(ArithFn::one(), 3) ==
        RationalPoly(std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(1)}));

  std::mt19937 rng(99);
  std::vector<Rat> sample;
  Rat acc(1, 3);
  for (int i = 0; i < 60; ++i) {
    acc += Rat(static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 7));
    sample.push_back(acc);
  }
  ArithFn random_monotone = ArithFn::custom("rmono", sample, false, true);
  for (ArithFn h : {ArithFn::id(), ArithFn::one(), ArithFn::squares(), random_monotone}) {
    long horizon = h.name() == "rmono" ? 60 : 100;
    PolySequence seq = build_sequence(ArithFn::one(), h, horizon);
    for (long n = 0; n <= horizon; ++n) CHECK(toy_closed_form(h, n) == seq.poly(n));
  }
}

TEST_CASE("toy roots are exactly {0, -h(1), ..., -h(n-1)}") {
  ArithFn h = ArithFn::squares();
  RationalPoly p = toy_closed_form(h, 6);
  CHECK(p.eval(Rat(0)) == Rat(0));
  for (long k = 1; k <= 5; ++k) CHECK(p.eval(-h.eval(k)) == Rat(0));
  CHECK(p.eval(Rat(-2)) != Rat(0));
}

TEST_CASE("Laguerre oracle") {
  CHECK(laguerre(0, Rat(1)) == RationalPoly::constant(Rat(1)));
  // L_1^(1) = 2 - x
  CHECK(laguerre(1, Rat(1)) == RationalPoly(std::vector<Rat>{Rat(2), Rat(-1)}));
  // (x/n) L_{n-1}^{(1)}(-x) = P_n^{id,id}
  PolySequence seq = build_sequence(ArithFn::id(), ArithFn::id(), 50);
  for (long n = 1; n <= 50; ++n) {
    RationalPoly l = laguerre(n - 1, Rat(1));
    RationalPoly composed = l.compose(RationalPoly::monomial(Rat(-1), 1));
    RationalPoly lhs = (RationalPoly::monomial(Rat(1), 1) * composed).scaled(Rat(1, n));
    CHECK(lhs == seq.poly(n));
  }
}

TEST_CASE("Chebyshev-U oracle") {
  CHECK(chebyshev_u(0) == RationalPoly::constant(Rat(1)));
  CHECK(chebyshev_u(1) == RationalPoly::monomial(Rat(2), 1));
  for (long n = 0; n <= 40; ++n) CHECK(chebyshev_u(n) == chebyshev_u_closed_form(n));
  // x U_{n-1}(x/2 + 1) = P_n^{id,one}
  PolySequence seq = build_sequence(ArithFn::id(), ArithFn::one(), 50);
  RationalPoly shift(std::vector<Rat>{Rat(1), Rat(1, 2)});  // x/2 + 1
  for (long n = 1; n <= 50; ++n) {
    RationalPoly lhs = RationalPoly::monomial(Rat(1), 1) * chebyshev_u(n - 1).compose(shift);
    CHECK(lhs == seq.poly(n));
  }
}
