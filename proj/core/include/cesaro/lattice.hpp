#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cesaro {

using Cplx = std::complex<double>;

// counts[q] = #{ f in (N^+)^dim : f_1^2 + ... + f_dim^2 = q }.
struct ShellTable {
    int dim = 0;
    std::vector<double> counts;
};

ShellTable make_shell_table(int dim, std::int64_t q_max);

struct LatticeSumResult {
    Cplx value;             // true sum = value * exp(log_scale)
    double log_scale = 0.0;  // pi |Im nu| / 2, shared across all shells
    double est_tail = 0.0;   // on the scaled value; |J| <= u^{-1/2} envelope
    std::int64_t points_used = 0;
};

// B_{k,h,eta,ell,N}(x) = N^{(h-eta+ell)/4} sum_{f in (N^+)^{h-eta}}
//   J_nu(2 pi sqrt(N) |f|) / |f|^nu,  nu = x + k + (h-eta+ell)/2,
// summed shell by shell in ascending |f|^2 and truncated at |f| > norm_max.
// The shell table must have dim == h-eta and cover norm_max^2.
LatticeSumResult eval_bessel_lattice_sum_scaled(Cplx x, double k, int h, int eta, int ell,
                                                double n, double norm_max,
                                                const ShellTable& shells);

// Unscaled convenience wrapper (builds its own shell table).
struct LatticeSum {
    Cplx value;
    double est_tail = 0.0;
    std::int64_t points_used = 0;
};

LatticeSum eval_bessel_lattice_sum(Cplx x, double k, int h, int eta, int ell, double n,
                                   double norm_max);

}  // namespace cesaro
