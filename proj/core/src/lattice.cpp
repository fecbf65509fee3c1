#include "cesaro/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cesaro/accum.hpp"
#include "cesaro/bessel.hpp"
#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;

// surface density of (N^+)^c lattice points near radius R:
// rho_c(R) = c pi^{c/2} R^{c-1} / (2^c Gamma(c/2+1))
double shell_density_coefficient(int c) {
    return double(c) * std::pow(kPi, c / 2.0) /
           (std::pow(2.0, double(c)) * std::tgamma(c / 2.0 + 1.0));
}

}  // namespace

ShellTable make_shell_table(int dim, std::int64_t q_max) {
    if (dim < 1) throw std::domain_error("make_shell_table: need dim >= 1");
    if (q_max < 1) throw std::domain_error("make_shell_table: need q_max >= 1");
    std::vector<double> sq(std::size_t(q_max) + 1, 0.0);
    for (std::int64_t t = 1; t * t <= q_max; ++t) sq[std::size_t(t * t)] = 1.0;
    std::vector<double> counts = sq;
    for (int c = 2; c <= dim; ++c) {
        std::vector<double> next(std::size_t(q_max) + 1, 0.0);
        for (std::int64_t a = 1; a <= q_max; ++a) {
            if (counts[std::size_t(a)] == 0.0) continue;
            for (std::int64_t t = 1; a + t * t <= q_max; ++t)
                next[std::size_t(a + t * t)] += counts[std::size_t(a)];
        }
        counts.swap(next);
    }
    return {dim, std::move(counts)};
}

LatticeSumResult eval_bessel_lattice_sum_scaled(Cplx x, double k, int h, int eta, int ell,
                                                double n, double norm_max,
                                                const ShellTable& shells) {
    int c = h - eta;
    if (c < 1) throw std::domain_error("eval_bessel_lattice_sum: need h - eta >= 1");
    if (shells.dim != c) throw std::logic_error("eval_bessel_lattice_sum: shell table dimension mismatch");
    if (n < 2.0 || norm_max < 1.0)
        throw std::domain_error("eval_bessel_lattice_sum: need N >= 2 and norm_max >= 1");

    Cplx nu = x + k + double(c + ell) / 2.0;
    // absolute convergence of sum_f |f|^{-1/2-Re nu} over (N^+)^c
    double exponent_floor = std::max(double(c) / 2.0, double(c) - 1.0) + 0.5;
    if (nu.real() <= exponent_floor)
        throw std::domain_error("eval_bessel_lattice_sum: Re(x)+k+(h-eta+ell)/2 = " +
                                std::to_string(nu.real()) + " <= " + std::to_string(exponent_floor) +
                                ", lattice sum diverges");

    auto q_max = std::int64_t(norm_max * norm_max);
    if (q_max >= std::int64_t(shells.counts.size()))
        q_max = std::int64_t(shells.counts.size()) - 1;

    double log_scale = kPi * std::fabs(nu.imag()) / 2.0;
    double npow = std::pow(n, double(c + ell) / 4.0);

    KahanSumComplex sum;
    KahanSum quad_err;
    std::int64_t points = 0;
    for (std::int64_t q = c; q <= q_max; ++q) {
        double count = shells.counts[std::size_t(q)];
        if (count == 0.0) continue;
        double u = 2.0 * kPi * std::sqrt(n * double(q));
        ScaledBessel j = bessel_j_scaled(nu, u);
        Cplx shell_pow = std::exp(-(nu / 2.0) * std::log(double(q)));  // |f|^{-nu}
        sum.add(count * j.value * shell_pow);
        quad_err.add(count * j.est_error * std::pow(double(q), -nu.real() / 2.0));
        points += std::int64_t(count);
    }

    // tail over shells beyond norm_max: |J_nu(u)| <= u^{-1/2} envelope (the
    // scaled value absorbs e^{pi |Im nu|/2}), density integral in closed form
    double r0 = std::sqrt(double(q_max));
    double decay = nu.real() + 0.5 - double(c);
    double tail = shell_density_coefficient(c) * std::pow(2.0 * kPi * std::sqrt(n), -0.5) *
                  std::pow(r0, -decay) / decay;

    LatticeSumResult result;
    result.value = npow * sum.value();
    result.log_scale = log_scale;
    result.est_tail = npow * (tail + quad_err.value());
    result.points_used = points;
    return result;
}

LatticeSum eval_bessel_lattice_sum(Cplx x, double k, int h, int eta, int ell, double n,
                                   double norm_max) {
    if (h - eta < 1) throw std::domain_error("eval_bessel_lattice_sum: need h - eta >= 1");
    ShellTable shells = make_shell_table(h - eta, std::int64_t(norm_max * norm_max));
    LatticeSumResult r = eval_bessel_lattice_sum_scaled(x, k, h, eta, ell, n, norm_max, shells);
    double scale = std::exp(r.log_scale);
    return {r.value * scale, r.est_tail * scale, r.points_used};
}

}  // namespace cesaro
