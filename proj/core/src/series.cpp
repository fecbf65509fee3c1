#include "cesaro/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cesaro/accum.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{m>M} m x^m = x^{M+1} ((M+1) - M x) / (1-x)^2
double geometric_weighted_tail(std::int64_t m_cut, double b) {
    double x = std::exp(-b);
    double head = std::exp(-b * double(m_cut + 1));
    return head * (double(m_cut + 1) - double(m_cut) * x) / ((1.0 - x) * (1.0 - x));
}

}  // namespace

SeriesValue eval_prime_power_series(int r, Cplx z, double tol) {
    if (r < 1) throw std::domain_error("eval_prime_power_series: need r >= 1");
    if (z.real() <= 0.0) throw std::domain_error("eval_prime_power_series: need Re z > 0");
    double a = z.real();

    // tail over m > M: log m <= m and m^r >= M^{r-1} m give a geometric bound
    auto tail_at = [&](std::int64_t m) {
        double b = a * std::pow(double(m), double(r - 1));
        return geometric_weighted_tail(m, b);
    };
    auto m_cut = std::int64_t(std::ceil(std::pow(40.0 / a, 1.0 / r))) + 10;
    while (tail_at(m_cut) > tol) {
        if (m_cut > 50'000'000)
            throw std::domain_error("eval_prime_power_series: Re z too small for tolerance");
        m_cut += m_cut / 4 + 16;
    }

    VonMangoldtTable lambda = sieve_von_mangoldt(std::max<std::int64_t>(m_cut, 2));
    KahanSumComplex sum;
    for (std::int64_t m = 2; m <= m_cut; ++m) {
        double w = lambda.values[std::size_t(m)];
        if (w == 0.0) continue;
        sum.add(w * std::exp(-std::pow(double(m), double(r)) * z));
    }
    return {sum.value(), tail_at(m_cut)};
}

SeriesValue eval_omega2(Cplx z, double tol) {
    if (z.real() <= 0.0) throw std::domain_error("eval_omega2: need Re z > 0");
    double a = z.real();

    // sum_{m>M} e^{-m^2 a} <= e^{-(M+1)^2 a} / (1 - e^{-(2M+3) a})
    auto tail_at = [&](std::int64_t m) {
        double head = std::exp(-double(m + 1) * double(m + 1) * a);
        return head / (1.0 - std::exp(-double(2 * m + 3) * a));
    };
    auto m_cut = std::int64_t(std::ceil(std::sqrt(40.0 / a))) + 4;
    while (tail_at(m_cut) > tol) ++m_cut;

    KahanSumComplex sum;
    for (std::int64_t m = 1; m <= m_cut; ++m) sum.add(std::exp(-double(m) * double(m) * z));
    return {sum.value(), tail_at(m_cut)};
}

double check_theta_functional_equation(Cplx z) {
    if (z.real() <= 0.0) throw std::domain_error("check_theta_functional_equation: need Re z > 0");
    const double tol = 1e-16;
    Cplx lhs = eval_omega2(z, tol).value;
    Cplx root = std::sqrt(kPi / z);
    Cplx rhs = 0.5 * root - 0.5 + root * eval_omega2(kPi * kPi / z, tol).value;
    return std::abs(lhs - rhs);
}

double check_generating_identity(const SummandSpec& spec, Cplx z, std::int64_t n_trunc) {
    if (z.real() < 0.1) throw std::domain_error("check_generating_identity: need Re z >= 0.1");
    if (n_trunc < 2) throw std::domain_error("check_generating_identity: need N_trunc >= 2");

    const double tol = 1e-14;
    Cplx product(1.0, 0.0);
    for (int rj : spec.r) product *= eval_prime_power_series(rj, z, tol).value;
    if (spec.h > 0) {
        Cplx w = eval_omega2(z, tol).value;
        for (int i = 0; i < spec.h; ++i) product *= w;
    }

    VonMangoldtTable lambda = sieve_von_mangoldt(n_trunc);
    ReprTable table = repr_counts(spec, n_trunc, lambda);
    KahanSumComplex sum;
    for (std::int64_t n = 1; n <= n_trunc; ++n) {
        double v = table.values[std::size_t(n)];
        if (v != 0.0) sum.add(v * std::exp(-double(n) * z));
    }
    return std::abs(product - sum.value());
}

}  // namespace cesaro
