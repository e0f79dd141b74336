#include "simcut/normal.hpp"

#include <cmath>

namespace simcut {

namespace {

constexpr double kSqrt1_2 = 0.70710678118654752440;
constexpr double kInv2Pi = 0.15915494309189533577;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double norm_cdf(double x) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return 0.5 * std::erfc(-x * kSqrt1_2);
}

double norm_pdf(double x) {
  if (std::isinf(x)) return 0.0;
  return std::exp(-0.5 * x * x) * 0.3989422804014326779;
}

// Wichura's PPND16 rational approximation, relative error below 1e-15.
double norm_cdf_inv(double u) {
  if (u <= 0.0) return -kInf;
  if (u >= 1.0) return kInf;
  double q = u - 0.5;
  if (std::abs(q) <= 0.425) {
    double r = 0.180625 - q * q;
    double num = (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                       6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                     1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                   1.3314166789178437745e2) * r + 3.3871328727963666080e0);
    double den = (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                       3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                     5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                   4.2313330701600911252e1) * r + 1.0);
    return q * num / den;
  }
  double r = q < 0.0 ? u : 1.0 - u;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    double num = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                       2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                     3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                   4.63033784615654529590e0) * r + 1.42343711074968357734e0);
    double den = (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                       1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                     6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                   2.05319162663775882187e0) * r + 1.0);
    val = num / den;
  } else {
    r -= 5.0;
    double num = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                       1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                     2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                   5.46378491116411436990e0) * r + 6.65790464350110377720e0);
    double den = (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                       1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                     1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                   5.99832206555887937690e-1) * r + 1.0);
    val = num / den;
  }
  return q < 0.0 ? -val : val;
}

Interval phi_bounds(double x) {
  if (std::isnan(x)) return {0.0, 1.0};
  if (x == kInf) return {1.0, 1.0};
  if (x == -kInf) return {0.0, 0.0};
  double z = -x * kSqrt1_2;
  double raw = std::erfc(z);
  // libm error allowance (measured few ulps, padded to 1e-13 relative) plus
  // the effect of rounding the argument.
  double arg_eff = 1.1283791670955126 * std::exp(-std::min(700.0, z * z)) *
                   (std::abs(z) + 1.0) * 0x1p-50;
  double err = raw * 1e-13 + arg_eff + 1e-307;
  double lo = 0.5 * (raw - err);
  double hi = 0.5 * (raw + err);
  return {std::max(0.0, lo), std::min(1.0, hi)};
}

Interval pdf_bounds(double x) {
  if (std::isinf(x)) return {0.0, 0.0};
  double v = std::exp(-0.5 * x * x) * 0.3989422804014326779;
  double err = v * 1e-13 + std::abs(x) * v * 0x1p-50 + 1e-307;
  return {std::max(0.0, v - err), v + err};
}

Interval phi_inv_bounds(double u) {
  if (u <= 0.0) return {-kInf, -kInf};
  if (u >= 1.0) return {kInf, kInf};
  double t = norm_cdf_inv(u);
  double d = std::max(4e-14, std::abs(t) * 4e-14);
  double lo = t - d, hi = t + d;
  for (int i = 0; i < 200 && phi_bounds(lo).hi > u; ++i) {
    d *= 4.0;
    lo = t - d;
  }
  d = std::max(4e-14, std::abs(t) * 4e-14);
  for (int i = 0; i < 200 && phi_bounds(hi).lo < u; ++i) {
    d *= 4.0;
    hi = t + d;
  }
  return {lo, hi};
}

Interval interval_phi(Interval x) {
  return {phi_bounds(x.lo).lo, phi_bounds(x.hi).hi};
}

Interval interval_phi_inv(Interval u) {
  double lo = u.lo <= 0.0 ? -kInf : phi_inv_bounds(u.lo).lo;
  double hi = u.hi >= 1.0 ? kInf : phi_inv_bounds(u.hi).hi;
  return {lo, hi};
}

Interval interval_pdf(Interval x) {
  double m = std::max(std::abs(x.lo), std::abs(x.hi));
  Interval at_far = pdf_bounds(m);
  double hi;
  if (x.lo <= 0.0 && x.hi >= 0.0)
    hi = pdf_bounds(0.0).hi;
  else
    hi = pdf_bounds(std::min(std::abs(x.lo), std::abs(x.hi))).hi;
  return {at_far.lo, hi};
}

namespace {

// Tetrachoric expansion around independence:
//   Phi2(h,k,r) = Phi(h)Phi(k) + pdf(h)pdf(k) * sum_{j>=1} r^j A_{j-1}(h) A_{j-1}(k) / j
// with A_n = He_n / sqrt(n!). Cramer's inequality |A_n(x)| <= 1.09 exp(x^2/4)
// gives a closed-form bound on the dropped tail.
Interval phi2_series(double h, double k, double rho, double tol) {
  Interval sum = interval_phi(Interval(h)) * interval_phi(Interval(k));
  Interval dens = pdf_bounds(h) * pdf_bounds(k);
  double abs_rho = std::abs(rho);
  if (abs_rho == 0.0) return sum;
  double tail_coef = 1.09 * 1.09 * kInv2Pi * std::exp(-(h * h + k * k) * 0.25);
  Interval ah_prev2(1.0), ah_prev(h);
  Interval ak_prev2(1.0), ak_prev(k);
  Interval rpow(rho);
  Interval acc(0.0);
  const int j_max = 200000;
  double tail = tail_coef * abs_rho / (1.0 - abs_rho);
  for (int j = 1; j <= j_max; ++j) {
    Interval ah, ak;
    if (j == 1) {
      ah = Interval(1.0);
      ak = Interval(1.0);
    } else if (j == 2) {
      ah = Interval(h);
      ak = Interval(k);
    } else {
      int n = j - 1;  // A_n from A_{n-1}, A_{n-2}
      Interval sn = isqrt(Interval(double(n)));
      Interval snm1 = isqrt(Interval(double(n - 1)));
      ah = (Interval(h) * ah_prev - snm1 * ah_prev2) / sn;
      ak = (Interval(k) * ak_prev - snm1 * ak_prev2) / sn;
      ah_prev2 = ah_prev;
      ah_prev = ah;
      ak_prev2 = ak_prev;
      ak_prev = ak;
    }
    acc = acc + rpow * ah * ak / Interval(double(j));
    rpow = rpow * Interval(rho);
    if ((j & 15) == 0 || j <= 4) {
      tail = tail_coef * std::pow(abs_rho, j + 1) / ((j + 1) * (1.0 - abs_rho));
      if (tail <= tol * 0.5) break;
    }
  }
  return sum + dens * acc + Interval(-tail, tail);
}

}  // namespace

Interval phi2_bounds(double h, double k, double rho, double tol) {
  if (std::isnan(h) || std::isnan(k)) return {0.0, 1.0};
  if (h == -kInf || k == -kInf) return {0.0, 0.0};
  if (h == kInf) return phi_bounds(k);
  if (k == kInf) return phi_bounds(h);
  rho = std::min(1.0, std::max(-1.0, rho));

  Interval ph = phi_bounds(h), pk = phi_bounds(k);
  // Frechet envelope, exact at rho = +-1.
  Interval frechet(std::max(0.0, ph.lo + pk.lo - 1.0), std::min(ph.hi, pk.hi));

  constexpr double kSeriesMax = 0.999;
  Interval est;
  if (rho > kSeriesMax) {
    double lo = phi2_series(h, k, kSeriesMax, tol).lo;
    est = Interval(lo, frechet.hi);
  } else if (rho < -kSeriesMax) {
    double hi = phi2_series(h, k, -kSeriesMax, tol).hi;
    est = Interval(frechet.lo, hi);
  } else {
    est = phi2_series(h, k, rho, tol);
  }
  Interval out = intersect(est, frechet);
  if (out.empty()) out = frechet;  // series and envelope disagree only by padding
  return intersect(out, Interval(0.0, 1.0));
}

double binormal_cdf(double h, double k, double rho) {
  Interval b = phi2_bounds(h, k, rho, 1e-12);
  return b.mid();
}

Interval interval_binormal(Interval h, Interval k, Interval rho, double tol) {
  double lo = phi2_bounds(h.lo, k.lo, rho.lo, tol).lo;
  double hi = phi2_bounds(h.hi, k.hi, rho.hi, tol).hi;
  return {lo, hi};
}

}  // namespace simcut
