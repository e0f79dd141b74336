#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simcut/common.hpp"
#include "simcut/interval.hpp"

using namespace simcut;

TEST_CASE("interval arithmetic contains point results") {
  Rng rng(12345);
  for (int it = 0; it < 20000; ++it) {
    double a0 = rng.uniform(-10, 10), a1 = rng.uniform(-10, 10);
    double b0 = rng.uniform(-10, 10), b1 = rng.uniform(-10, 10);
    Interval a = Interval::hull(a0, a1);
    Interval b = Interval::hull(b0, b1);
    double x = rng.uniform(a.lo, a.hi);
    double y = rng.uniform(b.lo, b.hi);
    CHECK((a + b).contains(x + y));
    CHECK((a - b).contains(x - y));
    CHECK((a * b).contains(x * y));
    CHECK(square(a).contains(x * x));
    if (b.lo > 0.5 || b.hi < -0.5) CHECK((a / b).contains(x / y));
  }
}

TEST_CASE("interval sqrt exp monotone functions") {
  Rng rng(999);
  for (int it = 0; it < 5000; ++it) {
    double a0 = rng.uniform(0, 20), a1 = rng.uniform(0, 20);
    Interval a = Interval::hull(a0, a1);
    double x = rng.uniform(a.lo, a.hi);
    CHECK(isqrt(a).contains(std::sqrt(x)));
    Interval e = Interval::hull(rng.uniform(-20, 3), rng.uniform(-20, 3));
    double z = rng.uniform(e.lo, e.hi);
    CHECK(iexp(e).contains(std::exp(z)));
  }
}

TEST_CASE("interval trig on restricted domains") {
  Rng rng(77);
  const double pi = 3.14159265358979323846;
  for (int it = 0; it < 5000; ++it) {
    Interval u = Interval::hull(rng.uniform(0, pi), rng.uniform(0, pi));
    double x = rng.uniform(u.lo, u.hi);
    CHECK(icos_0pi(u).contains(std::cos(x)));
    CHECK(isin_0pi(u).contains(std::sin(x)));
    Interval r = Interval::hull(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double c = rng.uniform(r.lo, r.hi);
    CHECK(iacos(r).contains(std::acos(c)));
  }
}

TEST_CASE("padding is outward") {
  Interval a(1.0, 1.0);
  Interval s = a + Interval(2.0, 2.0);
  CHECK(s.lo < 3.0);
  CHECK(s.hi > 3.0);
  CHECK(s.width() < 1e-12);
}

TEST_CASE("odd polynomial enclosure") {
  Rng rng(4242);
  for (int it = 0; it < 5000; ++it) {
    Interval x = Interval::hull(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double t = rng.uniform(x.lo, x.hi);
    double v = 0.79 * t + 0.07 * t * t * t + 0.14 * std::pow(t, 7);
    CHECK(ipoly_odd(x, 0.79, 0.07, 0.14).contains(v));
  }
}

TEST_CASE("intersect and hull") {
  Interval a(0.0, 2.0), b(1.0, 3.0);
  Interval c = intersect(a, b);
  CHECK(c.lo == 1.0);
  CHECK(c.hi == 2.0);
  CHECK(intersect(Interval(0, 1), Interval(2, 3)).empty());
}
