#pragma once

#include "simcut/interval.hpp"

namespace simcut {

// Standard normal CDF, density, and quantile. Point versions are accurate to
// a few ulps; the *_bounds versions return certified enclosures with generous
// padding over the libm error budget.

double norm_cdf(double x);
double norm_pdf(double x);
double norm_cdf_inv(double u);  // +-inf at u = 1 / 0

Interval phi_bounds(double x);
Interval phi_inv_bounds(double u);
Interval pdf_bounds(double x);

Interval interval_phi(Interval x);
Interval interval_phi_inv(Interval u);
Interval interval_pdf(Interval x);

// P(X <= h, Y <= k) for standard bivariate normal with correlation rho.
// Certified enclosure of width <= tol away from |rho| ~ 1; near the ends the
// exact degenerate values bound one side and the enclosure may be wider.
Interval phi2_bounds(double h, double k, double rho, double tol = 1e-9);
double binormal_cdf(double h, double k, double rho);

// Joint monotone corner enclosure over interval inputs.
Interval interval_binormal(Interval h, Interval k, Interval rho, double tol = 1e-9);

}  // namespace simcut
