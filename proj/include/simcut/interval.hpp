#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace simcut {

// Closed interval [lo, hi] with outward padding after every operation.
// Padding by 4 ulps per bound dominates the at-most-0.5-ulp error of IEEE
// round-to-nearest arithmetic, so enclosures stay sound without touching the
// hardware rounding mode.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double x) : lo(x), hi(x) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval hull(double a, double b) {
    return a <= b ? Interval(a, b) : Interval(b, a);
  }

  double width() const { return hi - lo; }
  double mid() const {
    if (std::isinf(lo) && std::isinf(hi)) return 0.0;
    if (std::isinf(lo)) return hi - 1.0;
    if (std::isinf(hi)) return lo + 1.0;
    return 0.5 * (lo + hi);
  }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool empty() const { return !(lo <= hi); }
};

// Outward inflation by ~2^-48 relative (about 32 ulps) plus a subnormal-safe
// absolute term. Exceeds the 0.5 ulp error of each IEEE operation by a wide
// margin at the cost of one multiply per bound.
constexpr double kPadRel = 0x1p-48;
constexpr double kPadAbs = 0x1p-1022;

inline double step_down(double x, int n = 4) {
  if (std::isinf(x)) return x;
  for (int i = 0; i < n; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

inline double step_up(double x, int n = 4) {
  if (std::isinf(x)) return x;
  for (int i = 0; i < n; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

inline Interval pad(Interval a) {
  double lo = std::isinf(a.lo) ? a.lo : a.lo - (std::abs(a.lo) * kPadRel + kPadAbs);
  double hi = std::isinf(a.hi) ? a.hi : a.hi + (std::abs(a.hi) * kPadRel + kPadAbs);
  return {lo, hi};
}

inline Interval operator+(Interval a, Interval b) { return pad({a.lo + b.lo, a.hi + b.hi}); }
inline Interval operator-(Interval a, Interval b) { return pad({a.lo - b.hi, a.hi - b.lo}); }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
  double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  for (double& x : c)
    if (std::isnan(x)) x = 0.0;  // 0 * inf at interval corners
  return pad({std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})});
}

// Division restricted to divisors bounded away from zero.
inline Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return pad({std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})});
}

inline Interval intersect(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline Interval square(Interval a) {
  double l = std::abs(a.lo), h = std::abs(a.hi);
  double mx = std::max(l, h);
  double mn = (a.lo <= 0.0 && a.hi >= 0.0) ? 0.0 : std::min(l, h);
  return pad({mn * mn, mx * mx});
}

inline Interval isqrt(Interval a) {
  double lo = a.lo < 0.0 ? 0.0 : a.lo;  // clip tiny negative from outer padding
  double hi = a.hi < 0.0 ? 0.0 : a.hi;
  return {step_down(std::sqrt(lo)), step_up(std::sqrt(hi))};
}

inline Interval iexp(Interval a) {
  double lo = std::exp(a.lo), hi = std::exp(a.hi);
  return {std::max(0.0, step_down(lo, 8)), step_up(hi, 8)};
}

// acos on [-1, 1], decreasing
inline Interval iacos(Interval a) {
  double lo = std::acos(std::min(1.0, std::max(-1.0, a.hi)));
  double hi = std::acos(std::min(1.0, std::max(-1.0, a.lo)));
  return {std::max(0.0, step_down(lo, 8)), std::min(step_up(hi, 8), step_up(3.14159265358979323846, 8))};
}

// asin on [-1, 1], increasing
inline Interval iasin(Interval a) {
  double lo = std::asin(std::min(1.0, std::max(-1.0, a.lo)));
  double hi = std::asin(std::min(1.0, std::max(-1.0, a.hi)));
  return {step_down(lo, 8), step_up(hi, 8)};
}

// cos restricted to [0, pi], decreasing
inline Interval icos_0pi(Interval a) {
  double lo = std::cos(std::min(a.hi, 3.14159265358979323846));
  double hi = std::cos(std::max(a.lo, 0.0));
  return {std::max(-1.0, step_down(lo, 8)), std::min(1.0, step_up(hi, 8))};
}

// sin restricted to [0, pi], peak at pi/2
inline Interval isin_0pi(Interval a) {
  constexpr double kPi = 3.14159265358979323846;
  constexpr double kHalfPi = 1.57079632679489661923;
  double lo = std::min(std::sin(std::max(a.lo, 0.0)), std::sin(std::min(a.hi, kPi)));
  double hi;
  if (a.lo <= kHalfPi && a.hi >= kHalfPi)
    hi = 1.0;
  else
    hi = std::max(std::sin(std::max(a.lo, 0.0)), std::sin(std::min(a.hi, kPi)));
  return {std::max(0.0, step_down(lo, 8)), std::min(1.0, step_up(hi, 8))};
}

// Horner evaluation of a polynomial with interval coefficient safety.
Interval ipoly_odd(Interval x, double c1, double c3, double c7);

}  // namespace simcut
