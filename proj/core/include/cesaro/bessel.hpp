#pragma once

#include <complex>

#include "cesaro/gamma.hpp"

namespace cesaro {

enum class BesselMethod { series, asymptotic };

struct BesselEvalResult {
    Cplx value;
    BesselMethod method;
    double est_error = 0.0;  // absolute estimate on value
};

// J_v(u) = value * exp(log_scale) with log_scale = pi*|Im v|/2. The scale is
// u-independent, so lattice sums over many arguments can share one factor and
// fold it into the Gamma-product logs of the surrounding zero sum.
struct ScaledBessel {
    Cplx value;
    double log_scale = 0.0;
    BesselMethod method = BesselMethod::series;
    double est_error = 0.0;  // on the scaled value
};

// Bessel J of complex order v (Re v > -1) and real argument u >= 0.
// Power series below the switch point u_switch = max(30, |v|^2/2),
// Hankel-type large-argument expansion above it.
BesselEvalResult bessel_j(Cplx v, double u);

ScaledBessel bessel_j_scaled(Cplx v, double u);

// Force one method regardless of u; used by the switch-agreement selftest.
ScaledBessel bessel_j_series(Cplx v, double u);
ScaledBessel bessel_j_asymptotic(Cplx v, double u);

// Vertical-line contour integral for J_v(u), trapezoid rule on Re s = a
// truncated at |Im s| <= t_max, with an integration-by-parts tail correction.
// Test oracle only; never used on production paths.
Cplx bessel_j_quadrature(Cplx v, double u, double a, double t_max, double tol = 1e-6);

double bessel_switch_point(Cplx v);

}  // namespace cesaro
