#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darcais/arith_fn.hpp"

namespace darcais {

/// Which coefficient series the bound is for:
///   G1: sum_{k>=1} |g(k+1)| T^k
///   G2: sum_{k>=2} |g(k+1) - g(2) g(k)| T^k
enum class SeriesKind { G1, G2 };

long series_k_min(SeriesKind kind);
/// The exact k-th term coefficient of the series for g.
Rat series_term(const ArithFn& g, SeriesKind kind, long k);

/// Termwise upper bound for G1 or G2: exact head coefficients for
/// k_min <= k < tail_start, then A * C(k + tail_shift, tail_deg) from
/// tail_start on. The tail has the closed-form sum
///   A T^(d-e) [ (1-T)^-(d+1) - sum_{j < K+e-d} C(j+d, d) T^j ],
/// so evaluation is a single exact rational expression. tail_shift = tail_deg
/// is the plain binomial tail; other shifts express exact forms like k+1 and
/// k-1 terms.
struct Majorant {
  SeriesKind kind = SeriesKind::G1;
  std::string g_name;
  ArithFn g;
  std::vector<Rat> head;   // c(k) for k_min <= k < tail_start, exact terms
  Rat tail_amp;            // A >= 0; A = 0 means the series is identically 0 past the head
  long tail_deg = 0;       // d
  long tail_shift = 0;     // e
  long tail_start = 0;     // K
  long verified_horizon = 0;  // M: termwise bound checked exactly on [K, M]

  long k_min() const { return series_k_min(kind); }
};

/// Builds the majorant and verifies it: head entries are the exact series
/// terms by construction, and series_term(k) <= A*C(k+e, d) is checked for
/// every K <= k <= M (throws naming the first violation).
Majorant make_majorant(ArithFn g, SeriesKind kind, Rat tail_amp, long tail_deg,
                       long tail_shift, long tail_start, long verified_horizon = 256);

/// The built-in majorants. head_len overrides the tail start (longer exact
/// heads give tighter bounds at the same T).
Majorant builtin_majorant(const std::string& g_name, SeriesKind kind,
                          std::optional<long> head_len = std::nullopt);

/// Exact upper bound for G_kind(T); requires 0 < T < 1.
Rat majorant_eval(const Majorant& m, const Rat& T);

}  // namespace darcais
