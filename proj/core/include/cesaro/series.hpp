#pragma once

#include <complex>

#include "cesaro/repr.hpp"

namespace cesaro {

using Cplx = std::complex<double>;

struct SeriesValue {
    Cplx value;
    double tail_bound = 0.0;  // explicit bound on the omitted tail
};

// S~_r(z) = sum_{m>=1} Lambda(m) e^{-m^r z}, truncated once the geometric
// tail bound drops below tol. Practical floor: Re z >= 0.01.
SeriesValue eval_prime_power_series(int r, Cplx z, double tol);

// omega_2(z) = sum_{m>=1} e^{-m^2 z}, Gaussian tail bound.
SeriesValue eval_omega2(Cplx z, double tol);

// | omega_2(z) - ( (pi/z)^{1/2}/2 - 1/2 + (pi/z)^{1/2} omega_2(pi^2/z) ) |,
// both sides by direct summation, principal square root.
double check_theta_functional_equation(Cplx z);

// | S~_{r_1}(z)...S~_{r_d}(z) omega_2(z)^h - sum_{n<=N_trunc} R(n) e^{-nz} |.
double check_generating_identity(const SummandSpec& spec, Cplx z, std::int64_t n_trunc);

}  // namespace cesaro
