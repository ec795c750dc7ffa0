#pragma once

#include <vector>

#include "darcais/rational.hpp"

namespace darcais {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<long> parts;

  long size() const;
  bool valid() const;
  /// Conjugate partition (column lengths of the Young diagram).
  std::vector<long> conjugate() const;
};

/// All partitions of n, each exactly once, lexicographically ascending as
/// sequences ([1,1,1,1] < [2,1,1] < [2,2] < [3,1] < [4]). Guarded at n <= 40.
std::vector<Partition> enumerate_partitions(long n);

/// Number of partitions of n by the independent counting recurrence
/// (no enumeration); used to cross-check enumerate_partitions.
Int partition_count(long n);

/// Hook lengths of every cell: hook(i,j) = lambda_i - j + lambda'_j - i + 1.
/// Returned sorted descending; one entry per cell.
std::vector<long> hook_lengths(const Partition& lambda);

}  // namespace darcais
