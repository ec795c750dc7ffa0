#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "darcais/rational.hpp"

namespace darcais {

/// A named arithmetic function n -> Rat (n >= 1) together with the flags the
/// recurrence machinery relies on. Values are exact; the positivity /
/// monotonicity contract is checked lazily up to the largest index queried
/// and the verified horizon is cached.
class ArithFn {
public:
  ArithFn() = default;

  static ArithFn one();                  // g(n) = 1
  static ArithFn id();                   // g(n) = n
  static ArithFn sigma();                // sum of divisors
  static ArithFn sigma3();               // sum of cubed divisors
  static ArithFn sigma_power(long k);    // sum of d^k over divisors, k >= 0
  static ArithFn squares();              // h(n) = n^2 (monotone normalizer)
  /// Finite table, 1-based; querying past the table is a hard error.
  static ArithFn custom(std::string name, std::vector<Rat> values,
                        bool normalized, bool monotone_positive);
  /// Look up a built-in by its CLI name ("one", "id", "sigma", "sigma3",
  /// "squares", "sigma_k:<k>").
  static ArithFn by_name(const std::string& name);

  const std::string& name() const { return name_; }
  bool is_normalized() const { return normalized_; }
  bool is_monotone_positive() const { return monotone_positive_; }
  /// True when every value at index <= horizon is an integer (checked and
  /// cached; enables the integer fast path of the recurrence engine).
  bool integer_valued_up_to(long horizon) const;

  /// g(n); n = 0 yields 0 by the h(0) := 0 extension, n < 0 is an error.
  Rat eval(long n) const;

  /// Checks the monotone-positivity contract on 1..horizon; throws
  /// domain_error naming the first offending index.
  void require_monotone_positive(long horizon) const;

  bool valid() const { return impl_ != nullptr; }

private:
  struct Impl;
  ArithFn(std::string name, std::shared_ptr<Impl> impl, bool normalized, bool monotone);

  std::string name_;
  std::shared_ptr<Impl> impl_;
  bool normalized_ = false;
  bool monotone_positive_ = false;
};

/// sigma_k(n) = sum of d^k over divisors d of n; exact, memoized.
Rat sigma_k(long n, long k);
/// |sigma(k+1) - 3 sigma(k)|, k >= 1.
Rat sigma_diff(long k);

/// Certified rational lower bound of ln(n), n >= 1 (directed rounding at
/// 128 bits; lower bound by construction, so "x <= (1+ln n)n" may be
/// concluded from "x <= (1+lb)n").
Rat ln_lower_bound(long n);

}  // namespace darcais
