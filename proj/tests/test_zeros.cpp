#include <doctest.h>

#include <algorithm>

#include "darcais/aberth.hpp"
#include "darcais/oracles.hpp"
#include "darcais/poly_sequence.hpp"
#include "darcais/sturm.hpp"

using namespace darcais;

namespace {

bool some_interval_contains(const std::vector<IsolatingInterval>& ivs, const Rat& v) {
  return std::any_of(ivs.begin(), ivs.end(),
                     [&](const IsolatingInterval& i) { return i.lo <= v && v <= i.hi; });
}

}  // namespace

TEST_CASE("real root isolation on the hand-expanded cases") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 4);
  auto iv2 = isolate_real_roots(seq.poly(2));  // x(x+3)/2
  CHECK(iv2.size() == 2);
  CHECK(some_interval_contains(iv2, Rat(0)));
  CHECK(some_interval_contains(iv2, Rat(-3)));

  auto iv4 = isolate_real_roots(seq.poly(4));  // x(x+1)(x+3)(x+14)/24
  REQUIRE(iv4.size() == 4);
  CHECK(iv4.front().lo <= Rat(-14));
  CHECK(iv4.front().hi >= Rat(-14));
  CHECK(iv4.front().hi < Rat(-3));  // disjoint and sorted
  for (size_t i = 1; i < iv4.size(); ++i) CHECK(iv4[i - 1].hi <= iv4[i].lo);

  CHECK(isolate_real_roots(RationalPoly::constant(Rat(1))).empty());
  CHECK_THROWS_AS(isolate_real_roots(RationalPoly()), domain_error);
}

TEST_CASE("isolation counts distinct roots after square-free reduction") {
  // (x-1)^2 (x+2): two distinct real roots
  RationalPoly p(std::vector<Rat>{Rat(2), Rat(-3), Rat(0), Rat(1)});
  auto ivs = isolate_real_roots(p);
  CHECK(ivs.size() == 2);
  CHECK(some_interval_contains(ivs, Rat(1)));
  CHECK(some_interval_contains(ivs, Rat(-2)));
}

TEST_CASE("refinement: bisection/Newton hybrid with exact sign tests") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 10);
  Rat tol(1, 1000000);

  auto iv5 = isolate_real_roots(seq.poly(5));
  IsolatingInterval leftmost = iv5.front();
  IsolatingInterval ref = refine_root(seq.poly(5), leftmost, tol);
  CHECK(ref.width() <= tol);
  // root at -20.6118742...
  CHECK((ref.lo + ref.hi - Rat(2) * Rat::parse("-20.611874")).abs() < Rat(1, 10000));

  auto iv10 = isolate_real_roots(seq.poly(10));
  IsolatingInterval ref10 = refine_root(seq.poly(10), iv10.front(), tol);
  CHECK(ref10.width() <= tol);
  // root at -58.1801375...
  CHECK((ref10.lo + ref10.hi - Rat(2) * Rat::parse("-58.180138")).abs() < Rat(1, 10000));

  // exact hit: x on [-1, 1]
  IsolatingInterval exact =
      refine_root(RationalPoly::monomial(Rat(1), 1), {Rat(-1), Rat(1)}, tol);
  CHECK(exact.is_point());
  CHECK(exact.lo == Rat(0));

  // even multiplicity: (x-2)^2 has no sign change; square-free fallback
  RationalPoly dbl(std::vector<Rat>{Rat(4), Rat(-4), Rat(1)});
  IsolatingInterval r2 = refine_root(dbl, {Rat(1), Rat(3)}, tol);
  CHECK(r2.width() <= tol);
  CHECK(r2.lo <= Rat(2));
  CHECK(r2.hi >= Rat(2));
}

TEST_CASE("all_roots on exactly factorable cases") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 3);
  RootReport r3 = all_roots(seq.poly(3));  // roots {0, -1, -8}
  CHECK(r3.n == 3);
  CHECK(r3.roots.size() == 3);
  CHECK(r3.min_re.contains(Rat(-8)));
  CHECK(r3.max_mod.contains(Rat(8)));
  CHECK(r3.min_re.width() < Rat(1, 1000000));
  for (const Rat& res : r3.residuals) CHECK(res < Rat(1, 1000));

  RootReport r1 = all_roots(seq.poly(1));
  CHECK(r1.roots.size() == 1);
  CHECK(r1.roots[0].re == Rat(0));
  CHECK(r1.roots[0].rad == Rat(0));
  CHECK(r1.min_re.lo == Rat(0));

  // every root enclosure respects the requested tolerance
  RootOptions tight;
  tight.tol = Rat(1, 1000000000L);
  RootReport r =
      all_roots(build_sequence(ArithFn::sigma(), ArithFn::id(), 12).poly(12), tight);
  for (const auto& e : r.roots) CHECK(e.rad <= tight.tol);
}

TEST_CASE("all_roots agrees with Sturm isolation on the real line") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 9);
  const RationalPoly& p = seq.poly(9);
  auto ivs = isolate_real_roots(p);
  RootReport rep = all_roots(p);
  // every isolating interval contains exactly one enclosure center
  for (const auto& iv : ivs) {
    long hits = 0;
    for (const auto& e : rep.roots)
      if (e.im.abs() <= e.rad && iv.lo - e.rad <= e.re && e.re <= iv.hi + e.rad) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("toy-family roots come out exactly where the closed form says") {
  ArithFn h = ArithFn::id();
  RootReport rep = all_roots(oracles::toy_closed_form(h, 8));
  REQUIRE(rep.roots.size() == 8);
  std::vector<Rat> res;
  for (const auto& e : rep.roots) {
    CHECK(e.im.abs() <= e.rad);
    res.push_back(e.re);
  }
  std::sort(res.begin(), res.end());
  for (long k = 0; k < 8; ++k) {
    Rat expect = k == 7 ? Rat(0) : -h.eval(7 - k);
    CHECK((res[static_cast<size_t>(k)] - expect).abs() <= rep.roots[0].rad + Rat(1, 1000000));
  }
}

TEST_CASE("Chebyshev specialization: roots of P_n^{id,one} lie in [-4, 0]") {
  PolySequence seq = build_sequence(ArithFn::id(), ArithFn::one(), 9);
  RootReport rep = all_roots(seq.poly(9));
  Rat slack(1, 1000);
  for (const auto& e : rep.roots) {
    CHECK(e.im.abs() <= e.rad + slack);
    CHECK(e.re >= Rat(-4) - slack);
    CHECK(e.re <= Rat(0) + slack);
  }
  // x = 2cos(k pi / n) - 2: spot-check k = n/3 -> 2cos(pi/3) - 2 = -1
  bool found = false;
  for (const auto& e : rep.roots)
    if ((e.re - Rat(-1)).abs() < Rat(1, 1000) && e.im.abs() < Rat(1, 1000)) found = true;
  CHECK(found);
}

TEST_CASE("zero-free verification against the sigma certificate") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 10);
  KappaCertificate cert = kappa_from(Variant::B, builtin_majorant("sigma", SeriesKind::G2),
                                     Rat(2, 11), Rat(3, 14));
  Rat ratio;
  RootReport r10 = all_roots(seq.poly(10));
  CHECK(verify_zero_free(r10, cert, ArithFn::id(), &ratio));
  CHECK(ratio > Rat(6));
  CHECK(ratio < Rat(7));  // 58.18 / 9 ~ 6.46

  RootReport r2 = all_roots(seq.poly(2));
  CHECK(verify_zero_free(r2, cert, ArithFn::id(), &ratio));
  CHECK(r2.max_mod.contains(Rat(3)));

  RootReport r1 = all_roots(seq.poly(1));
  CHECK(verify_zero_free(r1, cert, ArithFn::id(), &ratio));
  CHECK(ratio == Rat(0));
}

TEST_CASE("RootReport JSON enclosure schema") {
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), 2);
  std::string j = all_roots(seq.poly(2)).json();
  CHECK(j.find("\"re\": ") != std::string::npos);
  CHECK(j.find("\"im\": ") != std::string::npos);
  CHECK(j.find("\"rad\": ") != std::string::npos);
  CHECK(j.find("\"method\": \"aberth\"") != std::string::npos);
}
