#pragma once

#include <vector>

#include "darcais/rational.hpp"
#include "darcais/rational_poly.hpp"

namespace darcais {

/// Truncated formal power series in q with rational coefficients:
/// coefficient of q^k at index k, fixed truncation order.
class RatSeries {
public:
  explicit RatSeries(long order) : c_(static_cast<size_t>(order) + 1, Rat(0)) {}
  static RatSeries one(long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  Rat& operator[](size_t k) { return c_[k]; }
  const Rat& operator[](size_t k) const { return c_[k]; }

  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);  // truncated
  RatSeries scaled(const Rat& s) const;

  /// Multiplicative inverse (constant term must be nonzero); truncated.
  RatSeries inverse() const;

private:
  std::vector<Rat> c_;
};

/// Truncated series in q whose coefficients are polynomials in a second
/// variable z; the shape of exp(z A(q)) and 1/(1 - z B(q)) expansions.
class PolySeries {
public:
  explicit PolySeries(long order) : c_(static_cast<size_t>(order) + 1) {}
  static PolySeries one(long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  RationalPoly& operator[](size_t k) { return c_[k]; }
  const RationalPoly& operator[](size_t k) const { return c_[k]; }

  friend PolySeries operator+(const PolySeries& a, const PolySeries& b);
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);  // truncated

private:
  std::vector<RationalPoly> c_;
};

}  // namespace darcais
