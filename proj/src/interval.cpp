#include "simcut/interval.hpp"

namespace simcut {

Interval ipoly_odd(Interval x, double c1, double c3, double c7) {
  Interval x2 = square(x);
  Interval x3 = x2 * x;
  Interval x7 = square(x3) * x;
  return Interval(c1) * x + Interval(c3) * x3 + Interval(c7) * x7;
}

}  // namespace simcut
