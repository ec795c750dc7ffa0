#pragma once

#include <optional>
#include <string>

#include "darcais/majorant.hpp"

namespace darcais {

/// A (G1-based) and B (G2-based) non-vanishing radius constructions. The
/// B radius is never worse on a shared feasible T.
enum class Variant { A, B };

std::string variant_name(Variant v);
SeriesKind variant_series(Variant v);

/// Machine-checkable witness for "P_n(x) != 0 whenever |x| > kappa h(n-1)":
/// an exact T in (0,1), the exact majorant value at T, an admissible eps in
/// [bound, 1), and the kappa given by the variant formula
///   A: kappa = 1 / ((1-eps) T)
///   B: kappa = (1/T + |g(2)|) / (1-eps).
struct KappaCertificate {
  Variant variant = Variant::A;
  std::string g_name;
  Rat T;
  Rat eps;
  Rat g_bound;  // exact majorant value at T; eps >= g_bound
  Rat kappa;
  Majorant majorant;
  bool eps_overridden = false;

  /// JSON with every number as an exact "num/den" string.
  std::string json() const;
};

/// Thrown when no admissible certificate exists at the requested T / grid.
class infeasible_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Certificate at a fixed T. Without an override, eps is the exact majorant
/// value at T (the tightest admissible choice); an override must satisfy
/// bound <= eps < 1 and reproduces externally fixed (eps, T) pairs.
KappaCertificate kappa_from(Variant variant, const Majorant& m, const Rat& T,
                            std::optional<Rat> eps_override = std::nullopt);

struct GridSpec {
  long points = 64;        // grid resolution per refinement round
  long max_rounds = 48;
  Rat rel_tol = Rat(1, 1000000);  // stop when kappa improves less than this
};

/// Smallest kappa found by a coarse scan plus interval refinement; the result
/// is always a valid certificate. Ties break toward smaller T.
KappaCertificate optimize_kappa(Variant variant, const Majorant& m,
                                const GridSpec& grid = {});

/// Analytic lower bound on any kappa this method can produce for g:
///   A: |g(2)| / ((1-eps) eps), eps-free 4 |g(2)|
///   B: (sqrt(|g(2)^2 - g(3)| / eps) + |g(2)|) / (1-eps),
///      eps-free (3/2) sqrt(3 |g(2)^2 - g(3)|) + |g(2)|.
/// Square roots come back as certified enclosures.
RatInterval lower_bound(Variant variant, const ArithFn& g,
                        std::optional<Rat> eps = std::nullopt);

/// The A-to-B comparison at a shared T:
/// G2(T) <= (1 + |g(2)| T) G1(T) - |g(2)| T, so eps2 built from eps1 by that
/// chain gives kappa_B <= kappa_A. Reports both the chain certificate and the
/// direct G2-majorant certificate (the sharper of the two in practice).
struct AbComparison {
  Rat T;
  Rat eps1, kappa1;
  Rat eps2_chain, kappa2_chain;  // from the displayed inequality chain
  Rat eps2, kappa2;              // direct B certificate at the same T
  bool chain_holds = false;      // kappa2_chain <= kappa1, exact
  bool b_not_worse = false;      // kappa2 <= kappa1, exact
};

AbComparison compare_a_b(const Majorant& m1, const Majorant& m2, const Rat& T,
                         std::optional<Rat> eps1_override = std::nullopt,
                         std::optional<Rat> eps2_override = std::nullopt);

}  // namespace darcais
