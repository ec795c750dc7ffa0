#include "darcais/sturm.hpp"

#include <algorithm>

namespace darcais {

namespace {

// content division preserving sign (primitive_part() flips to positive lead,
// which would wreck a sign chain)
IntPoly reduce_content_keep_sign(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = p.content();
  IntPoly out = p;
  if (c != 1) out.divexact_by(c);
  return out;
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 1) return reduce_content_keep_sign(p);
  IntPoly g = int_poly_gcd(p, p.derivative());
  if (g.degree() == 0) return reduce_content_keep_sign(p);
  return reduce_content_keep_sign(p.primitive_part().divide_exact(g));
}

// Cauchy bound: all real roots lie strictly inside (-B, B)
Rat root_bound(const IntPoly& p) {
  Rat maxratio(0);
  Rat lead(p.leading());
  for (size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
    Rat r = Rat(p[k]).abs() / lead.abs();
    if (r > maxratio) maxratio = r;
  }
  return maxratio + Rat(2);
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& square_free) {
  std::vector<IntPoly> chain;
  chain.push_back(square_free);
  if (square_free.degree() < 1) return chain;
  chain.push_back(reduce_content_keep_sign(square_free.derivative()));
  while (chain.back().degree() > 0) {
    IntPoly r = pseudo_rem_signed(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    r = reduce_content_keep_sign(r);
    r.negate();
    chain.push_back(std::move(r));
  }
  return chain;
}

long sturm_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  long variations = 0;
  int prev = 0;
  for (const IntPoly& s : chain) {
    int sign = s.sign_at(x);
    if (sign == 0) continue;
    if (prev != 0 && sign != prev) ++variations;
    prev = sign;
  }
  return variations;
}

namespace {

struct Isolator {
  const std::vector<IntPoly>& chain;
  const IntPoly& f;  // square-free part, chain[0]
  std::vector<IsolatingInterval> out;

  // cut point near the middle that is not a root of f (Sturm counts need
  // non-root endpoints); nudged dyadically when the midpoint is unlucky
  Rat safe_cut(const Rat& lo, const Rat& hi) {
    Rat mid = (lo + hi) / 2;
    if (f.sign_at(mid) != 0) return mid;
    Rat width = hi - lo;
    for (long j = 3;; ++j) {
      Rat offset = width / Rat(Int(1) << j);
      Rat cand = mid + offset;
      if (cand < hi && f.sign_at(cand) != 0) return cand;
      cand = mid - offset;
      if (cand > lo && f.sign_at(cand) != 0) return cand;
    }
  }

  void split(const Rat& lo, const Rat& hi, long v_lo, long v_hi) {
    long count = v_lo - v_hi;
    if (count <= 0) return;
    if (count == 1) {
      out.push_back({lo, hi});
      return;
    }
    Rat cut = safe_cut(lo, hi);
    long v_cut = sturm_variations(chain, cut);
    split(lo, cut, v_lo, v_cut);
    split(cut, hi, v_cut, v_hi);
  }
};

Rat round_dyadic(const Rat& x, long bits) {
  Int scale = Int(1) << bits;
  Rat scaled = x * Rat(scale);
  // nearest: floor(x*2^b + 1/2)
  Rat shifted = scaled + Rat(1, 2);
  return Rat(shifted.floor(), scale);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& p) {
  if (p.is_zero()) throw domain_error("isolate_real_roots: zero polynomial");
  if (p.degree() == 0) return {};
  auto [ip, den] = p.clear_denominators();
  IntPoly f = square_free_part(ip);
  if (f.degree() < 1) return {};

  std::vector<IntPoly> chain = sturm_chain(f);
  Rat bound = root_bound(f);
  long v_lo = sturm_variations(chain, -bound);
  long v_hi = sturm_variations(chain, bound);

  Isolator iso{chain, chain.front(), {}};
  iso.split(-bound, bound, v_lo, v_hi);
  std::sort(iso.out.begin(), iso.out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return iso.out;
}

IsolatingInterval refine_root(const RationalPoly& p, const IsolatingInterval& interval,
                              const Rat& tol) {
  if (tol.sign() <= 0) throw domain_error("refine_root: tolerance must be positive");
  if (interval.is_point()) return interval;

  auto [ip, den] = p.clear_denominators();
  IntPoly f = reduce_content_keep_sign(ip);
  int s_lo = f.sign_at(interval.lo);
  int s_hi = f.sign_at(interval.hi);
  if (s_lo == 0) return {interval.lo, interval.lo};
  if (s_hi == 0) return {interval.hi, interval.hi};
  if (s_lo == s_hi) {
    // even multiplicity inside: switch to the square-free part
    f = square_free_part(f);
    s_lo = f.sign_at(interval.lo);
    s_hi = f.sign_at(interval.hi);
    if (s_lo == 0) return {interval.lo, interval.lo};
    if (s_hi == 0) return {interval.hi, interval.hi};
    if (s_lo == s_hi)
      throw domain_error("refine_root: interval does not isolate a root");
  }

  IntPoly df = f.derivative();
  Rat lo = interval.lo, hi = interval.hi;
  // enough dyadic bits to express anything down to tol, plus slack; keeps
  // Newton iterates representable without letting denominators run away
  long tol_bits = bit_length(tol.den()) - bit_length(tol.num()) + 8;
  bool try_newton = false;
  while (hi - lo > tol) {
    Rat candidate = (lo + hi) / 2;
    if (try_newton) {
      Rat width = hi - lo;
      long width_bits = bit_length(width.den()) - bit_length(width.num());
      long newton_bits = std::max(32L, std::min(2 * (width_bits + 4), tol_bits + 16));
      Rat mid = candidate;
      Rat dfm = df.eval(mid);
      if (!dfm.is_zero()) {
        Rat step = f.eval(mid) / dfm;
        Rat cand = round_dyadic(mid - step, newton_bits);
        if (cand > lo && cand < hi) candidate = cand;
      }
    }
    try_newton = !try_newton;
    int s_mid = f.sign_at(candidate);
    if (s_mid == 0) return {candidate, candidate};
    if (s_mid == s_lo)
      lo = candidate;
    else
      hi = candidate;
  }
  return {lo, hi};
}

}  // namespace darcais
