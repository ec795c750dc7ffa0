#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darcais/rational.hpp"

namespace darcais {

/// One regenerated reference table: the rendered TSV plus the result of the
/// comparison against the golden values.
struct TableResult {
  std::string tsv;
  bool matches = false;
  std::string diff;  // empty when matches
};

/// Regenerates reference table 1..5 and diffs it against the golden data:
///   1: 230^(n-1) | beta_n/240 | 232^(n-1), n = 1..max_n (golden to 10)
///   2: normalized 1/E4 columns at 8 decimals, rows 0..max_n-1 (golden to 10)
///   3: the g = id certificate row (eps1, T1, kappa1, eps2, T2, kappa2)
///   4: |sigma(k+1) - 3 sigma(k)| for k = 1..14
///   5: minimal real part of the zeros of P_n^{sigma,id}, 5 decimals,
///      n in {1..min(10,max_n)} plus {50, 100} when max_n allows
/// jobs parallelizes table 5 across n.
TableResult make_table(int which, long max_n, long jobs = 1);

/// Golden minimal-zero strings for table 5 (5 decimals) for the n values the
/// acceptance gate pins; 500 and 1000 are stretch entries.
const std::vector<std::pair<long, std::string>>& table5_golden();

}  // namespace darcais
