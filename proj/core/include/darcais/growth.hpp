#pragma once

#include <string>
#include <vector>

#include "darcais/kappa.hpp"
#include "darcais/poly_sequence.hpp"

namespace darcais {

/// The strict inequalities a certificate promises on |x| > kappa h(n-1).
enum class GrowthCheck {
  a_remainder,    // |P_n - (x/h(n)) P_{n-1}|  <  eps |x|/h(n) |P_{n-1}|
  a_sandwich,     // (1 -+ eps) |x|/h(n) |P_{n-1}|  lies around  |P_n|
  b_remainder,    // |P_n - (x + g(2) h(n-1))/h(n) P_{n-1}|  <  eps |x|/h(n) |P_{n-1}|
  b_sandwich,     // (|x + g(2) h(n-1)| -+ eps |x|)/h(n) |P_{n-1}|  around  |P_n|
  half_sandwich,  // |x|/(2 h(n)) |P_{n-1}|  <  |P_n|  <  3|x|/(2 h(n)) |P_{n-1}|
};

std::string growth_check_name(GrowthCheck c);

struct GrowthCheckResult {
  long n = 0;
  Rat delta;
  std::string angle;   // "pi", "pi/2", "pi/4", "offset"
  GrowthCheck check = GrowthCheck::a_remainder;
  bool pass = false;
  bool exact = false;  // rational sample, decided by exact arithmetic
  std::string detail;
};

struct GrowthReport {
  std::vector<GrowthCheckResult> checks;
  long failures = 0;
  bool all_pass() const { return failures == 0; }
};

struct GrowthOptions {
  std::vector<Rat> deltas{Rat(1, 1000), Rat(1), Rat(10)};
  long precision = 192;
  long max_precision = 4096;
};

/// Samples |x| = kappa h(n-1) (1 + delta) at arguments pi, pi/2, pi/4 and a
/// 1/64 rad offset from the positive axis, and checks the certificate's
/// inequalities for every n in [n_lo, n_hi]. Real samples are decided
/// exactly; complex samples by certified disk evaluation with precision
/// escalation. For n = 1 (where h(0) = 0 makes the radius degenerate) the
/// sample radius uses h(1) instead, still inside the theorems' domain.
GrowthReport verify_growth(const PolySequence& seq, const KappaCertificate& cert,
                           long n_lo, long n_hi, const GrowthOptions& opts = {});

/// The eps = 1/2 two-sided bound at a caller-chosen radius factor kappa
/// (valid whenever G1(2/kappa) <= 1/2, which the caller certifies via a
/// majorant).
GrowthReport verify_growth_half_sandwich(const PolySequence& seq, const Rat& kappa,
                                         long n_lo, long n_hi,
                                         const GrowthOptions& opts = {});

}  // namespace darcais
