#include "lipdyn/interval.hpp"

#include <cmath>

namespace lipdyn::iv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfPi = 1.5707963267948966192313216916398;

// Does [lo, hi] contain a point congruent to `target` mod 2*pi?
bool hits_phase(double lo, double hi, double target) {
  if (hi - lo >= kTwoPi) return true;
  double k = std::ceil((lo - target) / kTwoPi);
  double candidate = target + k * kTwoPi;
  // One ulp of slack on each side: phase reduction itself is inexact.
  return candidate <= hi + 1e-12 * (1.0 + std::fabs(hi));
}

}  // namespace

Interval sin(const Interval& a) {
  if (a.width() >= kTwoPi) return {-1.0, 1.0};
  double s1 = std::sin(a.lo), s2 = std::sin(a.hi);
  double lo = std::min(s1, s2), hi = std::max(s1, s2);
  if (hits_phase(a.lo, a.hi, kHalfPi)) hi = 1.0;
  if (hits_phase(a.lo, a.hi, -kHalfPi)) lo = -1.0;
  Interval r = widen(lo, hi);
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

Interval cos(const Interval& a) {
  if (a.width() >= kTwoPi) return {-1.0, 1.0};
  double c1 = std::cos(a.lo), c2 = std::cos(a.hi);
  double lo = std::min(c1, c2), hi = std::max(c1, c2);
  if (hits_phase(a.lo, a.hi, 0.0)) hi = 1.0;
  if (hits_phase(a.lo, a.hi, kTwoPi * 0.5)) lo = -1.0;
  Interval r = widen(lo, hi);
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

Interval pow(const Interval& a, const Interval& b) {
  // Only constant exponents appear in the grammar; reject interval exponents.
  if (b.lo != b.hi)
    fail(ErrorCode::eval, "interval power requires a constant exponent");
  double e = b.lo;
  double rounded = std::nearbyint(e);
  if (rounded == e && std::fabs(e) < 64.0) {
    long k = long(rounded);
    if (k == 0) return {1.0, 1.0};
    bool invert = k < 0;
    k = std::labs(k);
    Interval base = a;
    if (k % 2 == 0) {
      Interval m = abs(a);
      Interval r = widen(std::pow(m.lo, double(k)), std::pow(m.hi, double(k)));
      if (invert) return div(Interval(1.0), r);
      return r;
    }
    Interval r = widen(std::pow(base.lo, e), std::pow(base.hi, e));
    if (invert) return div(Interval(1.0), r);
    return r;
  }
  // Fractional exponent: defined for nonnegative base only.
  if (a.lo < 0.0)
    fail(ErrorCode::eval, "fractional power of interval reaching negatives");
  return widen(std::pow(a.lo, e), std::pow(a.hi, e));
}

}  // namespace lipdyn::iv
