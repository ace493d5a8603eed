#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipdyn/common.hpp"

namespace lipdyn {

// Closed interval [lo, hi] with outward rounding: every operation widens its
// result by one ulp per endpoint, which is enough for sound enclosures at the
// precision this library targets (box-image pruning, not certified bounds).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double x) : lo(x), hi(x) {}
  Interval(double a, double b) : lo(a), hi(b) {
    if (!(lo <= hi)) fail(ErrorCode::internal, "inverted interval");
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

namespace iv {

inline double down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline Interval widen(double lo, double hi) { return {down(lo), up(hi)}; }

inline Interval add(const Interval& a, const Interval& b) {
  return widen(a.lo + b.lo, a.hi + b.hi);
}
inline Interval sub(const Interval& a, const Interval& b) {
  return widen(a.lo - b.hi, a.hi - b.lo);
}
inline Interval neg(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval mul(const Interval& a, const Interval& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widen(std::min(std::min(p1, p2), std::min(p3, p4)),
               std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval div(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    fail(ErrorCode::eval, "interval division by interval containing zero");
  return mul(a, widen(1.0 / b.hi, 1.0 / b.lo));
}

inline Interval abs(const Interval& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return neg(a);
  return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval min(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
inline Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval exp(const Interval& a) {
  return widen(std::exp(a.lo), std::exp(a.hi));
}
inline Interval ln(const Interval& a) {
  if (a.lo <= 0.0) fail(ErrorCode::eval, "ln of interval reaching <= 0");
  return widen(std::log(a.lo), std::log(a.hi));
}
inline Interval tanh(const Interval& a) {
  return widen(std::tanh(a.lo), std::tanh(a.hi));
}

Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval pow(const Interval& a, const Interval& b);

}  // namespace iv
}  // namespace lipdyn
