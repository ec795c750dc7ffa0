#pragma once

#include <string>
#include <vector>

#include "darcais/kappa.hpp"
#include "darcais/rational_poly.hpp"

namespace darcais {

/// One root as a certified disk: |root - (re + im i)| <= rad, all exact
/// rationals (dyadic, converted losslessly from the working floats).
struct RootEnclosure {
  Rat re, im, rad;
};

/// Certified zero set of one polynomial.
struct RootReport {
  long n = 0;  // degree == number of roots with multiplicity
  std::vector<RootEnclosure> roots;
  RatInterval min_re;   // min over roots of Re
  RatInterval max_mod;  // max over roots of |root|
  std::string method;   // "aberth" | "sturm"
  long precision_bits = 0;
  std::vector<Rat> residuals;  // certified upper bounds on |p(center)|

  std::string json() const;
};

struct RootOptions {
  long start_precision = 128;
  long max_precision = 8192;
  Rat tol = Rat(1, 10000000);  // enclosure radius target
};

/// All complex roots by simultaneous (Aberth-Ehrlich) iteration at escalating
/// precision. Exact zero roots are deflated and reported with radius 0;
/// linear leftovers are solved exactly. Certification is by Weierstrass
/// disks: centered at the approximations with radius
///   n |p(z_i)| / (|lead| prod_{j != i} |z_i - z_j|),
/// every bound directed so the disks rigorously contain all roots; pairwise
/// disjointness then pins exactly one root per disk. Throws resource_error
/// with diagnostics if the precision cap is hit before every radius is
/// within tol.
RootReport all_roots(const RationalPoly& p, const RootOptions& opts = {});

/// True iff every root modulus is certifiably <= kappa * h(n-1). Also
/// reports the empirical ratio max|root| / h(n-1) (interval upper end) when
/// h(n-1) > 0. Inconclusive enclosures throw resource_error asking for a
/// smaller tolerance.
bool verify_zero_free(const RootReport& report, const KappaCertificate& cert,
                      const ArithFn& h, Rat* ratio_out = nullptr);

}  // namespace darcais
