#include "darcais/series.hpp"

#include <algorithm>

namespace darcais {

RatSeries RatSeries::one(long order) {
  RatSeries s(order);
  s[0] = Rat(1);
  return s;
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  RatSeries out(std::max(a.order(), b.order()));
  for (size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
  return out;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  RatSeries out(std::max(a.order(), b.order()));
  size_t n = out.c_.size();
  for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    size_t jmax = std::min(b.c_.size(), n - i);
    for (size_t j = 0; j < jmax; ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

RatSeries RatSeries::scaled(const Rat& s) const {
  RatSeries out(order());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * s;
  return out;
}

RatSeries RatSeries::inverse() const {
  if (c_[0].is_zero()) throw domain_error("RatSeries: inverse needs nonzero constant term");
  RatSeries out(order());
  Rat inv0 = c_[0].inverse();
  out[0] = inv0;
  for (size_t n = 1; n < c_.size(); ++n) {
    Rat acc(0);
    for (size_t k = 1; k <= n; ++k) acc += c_[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

PolySeries PolySeries::one(long order) {
  PolySeries s(order);
  s[0] = RationalPoly::constant(Rat(1));
  return s;
}

PolySeries operator+(const PolySeries& a, const PolySeries& b) {
  PolySeries out(std::max(a.order(), b.order()));
  for (size_t k = 0; k < a.c_.size(); ++k) out[k] = out[k] + a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) out[k] = out[k] + b.c_[k];
  return out;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  PolySeries out(std::max(a.order(), b.order()));
  size_t n = static_cast<size_t>(out.order()) + 1;
  for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    size_t jmax = std::min(b.c_.size(), n - i);
    for (size_t j = 0; j < jmax; ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
  }
  return out;
}

}  // namespace darcais
