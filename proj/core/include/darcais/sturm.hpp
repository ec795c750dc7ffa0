#pragma once

#include <vector>

#include "darcais/rational_poly.hpp"

namespace darcais {

/// Isolating interval for one real root; lo == hi means the root is hit
/// exactly (rational root).
struct IsolatingInterval {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
};

/// Disjoint intervals, each containing exactly one real root of p, together
/// covering all of them (count by Sturm sign variations over exact
/// rationals). The square-free part is taken first, so multiple roots are
/// isolated once. Runs on the primitive integer part of p.
std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& p);

/// Shrinks an isolating interval to width <= tol by safeguarded
/// bisection/Newton steps with exact sign tests (Newton iterates are rounded
/// to dyadic rationals to keep denominators tame). If the interval carries no
/// sign change (even multiplicity), falls back to the square-free part.
IsolatingInterval refine_root(const RationalPoly& p, const IsolatingInterval& interval,
                              const Rat& tol);

/// Number of sign variations of the Sturm chain of p at x, exposed for the
/// variation-count tests.
long sturm_variations(const std::vector<IntPoly>& chain, const Rat& x);
std::vector<IntPoly> sturm_chain(const IntPoly& square_free);

}  // namespace darcais
