#include "darcais/partitions.hpp"

#include <algorithm>

namespace darcais {

long Partition::size() const {
  long s = 0;
  for (long p : parts) s += p;
  return s;
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::vector<long> Partition::conjugate() const {
  if (parts.empty()) return {};
  std::vector<long> conj(static_cast<size_t>(parts[0]), 0);
  for (long p : parts)
    for (long j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
  return conj;
}

namespace {

// First part ascending, remainder recursively with parts capped by the part
// just chosen: yields each weakly decreasing sequence once, lexicographically
// ascending ([1,1,1,1] < [2,1,1] < [2,2] < [3,1] < [4]).
void walk(long remaining, long cap, std::vector<long>& prefix,
          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (long m = 1; m <= std::min(remaining, cap); ++m) {
    prefix.push_back(m);
    walk(remaining - m, m, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long n) {
  if (n < 0) throw domain_error("enumerate_partitions: negative n");
  if (n > 40)
    throw resource_error("enumerate_partitions: n = " + std::to_string(n) +
                         " beyond the n <= 40 horizon");
  std::vector<Partition> out;
  std::vector<long> prefix;
  walk(n, n, prefix, out);
  return out;
}

Int partition_count(long n) {
  if (n < 0) return Int(0);
  std::vector<Int> p(static_cast<size_t>(n) + 1, Int(0));
  p[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long v = part; v <= n; ++v)
      p[static_cast<size_t>(v)] += p[static_cast<size_t>(v - part)];
  return p[static_cast<size_t>(n)];
}

std::vector<long> hook_lengths(const Partition& lambda) {
  if (!lambda.valid()) throw domain_error("hook_lengths: invalid partition");
  std::vector<long> conj = lambda.conjugate();
  std::vector<long> hooks;
  hooks.reserve(static_cast<size_t>(lambda.size()));
  for (size_t i = 0; i < lambda.parts.size(); ++i)
    for (long j = 1; j <= lambda.parts[i]; ++j)
      hooks.push_back(lambda.parts[i] - j + conj[static_cast<size_t>(j - 1)] -
                      static_cast<long>(i + 1) + 1);
  std::sort(hooks.rbegin(), hooks.rend());
  return hooks;
}

}  // namespace darcais
