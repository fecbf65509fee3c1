// Regenerates the bundled zeta-zero fixtures (tests/data/zeros*.txt).
//
// Euler-Maclaurin evaluation of zeta(1/2+it), rotated by the Riemann-Siegel
// theta to the real-valued Z(t); zeros are bracketed by a fine scan and
// refined by bisection. The result is checked against the Riemann-von
// Mangoldt counting estimate before anything is written, so a missed or
// spurious zero aborts the run.
//
// Usage: gen_zeros <count> <outfile>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "cesaro/gamma.hpp"
#include "cesaro/zeros.hpp"

using cesaro::Cplx;

namespace {

constexpr double kPi = std::numbers::pi;

Cplx zeta_em(Cplx s) {
    // B_{2k} for the Euler-Maclaurin correction terms
    static const double b2k[] = {1.0 / 6,       -1.0 / 30,      1.0 / 42,      -1.0 / 30,
                                 5.0 / 66,      -691.0 / 2730,  7.0 / 6,       -3617.0 / 510,
                                 43867.0 / 798, -174611.0 / 330};
    long m = std::lround(std::max(50.0, std::ceil(std::abs(s.imag()))));
    Cplx sum(0.0, 0.0);
    for (long n = 1; n <= m; ++n) sum += std::exp(-s * std::log(double(n)));
    Cplx mc(double(m), 0.0);
    Cplx acc = sum + std::exp((1.0 - s) * std::log(mc)) / (s - 1.0) - 0.5 * std::exp(-s * std::log(mc));
    Cplx poch(1.0, 0.0);  // s(s+1)...(s+2k-2)
    double fact = 1.0;    // (2k)!
    for (int k = 1; k <= 10; ++k) {
        poch *= (k == 1) ? s : (s + double(2 * k - 3)) * (s + double(2 * k - 2));
        fact *= (k == 1) ? 2.0 : double(2 * k) * double(2 * k - 1);
        acc += b2k[k - 1] / fact * poch * std::exp((1.0 - s - double(2 * k)) * std::log(mc));
    }
    return acc;
}

double siegel_theta(double t) {
    return cesaro::log_gamma(Cplx(0.25, t / 2.0)).imag() - t / 2.0 * std::log(kPi);
}

double hardy_z(double t) {
    Cplx rotated = std::exp(Cplx(0.0, siegel_theta(t))) * zeta_em(Cplx(0.5, t));
    return rotated.real();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: gen_zeros <count> <outfile>\n");
        return 1;
    }
    long want = std::atol(argv[1]);
    const char* path = argv[2];

    std::vector<double> zeros;
    double step = 0.02;
    double t = 10.0;
    double z_prev = hardy_z(t);
    while (long(zeros.size()) < want) {
        double t_next = t + step;
        double z_next = hardy_z(t_next);
        if ((z_prev < 0.0) != (z_next < 0.0)) {
            double lo = t, hi = t_next, z_lo = z_prev;
            for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
                double mid = 0.5 * (lo + hi);
                double z_mid = hardy_z(mid);
                if ((z_lo < 0.0) != (z_mid < 0.0))
                    hi = mid;
                else {
                    lo = mid;
                    z_lo = z_mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
            if (zeros.size() % 100 == 0)
                std::fprintf(stderr, "  %zu zeros, height %.3f\n", zeros.size(), zeros.back());
        }
        t = t_next;
        z_prev = z_next;
    }

    // counting-function gate: a missed sign change shows up immediately
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        double dev = std::fabs(double(i + 1) - cesaro::riemann_von_mangoldt_estimate(zeros[i]));
        if (dev > 1.5) {
            std::fprintf(stderr, "FATAL: counting deviation %.3f at zero %zu (%.6f)\n", dev, i + 1,
                         zeros[i]);
            return 1;
        }
    }

    std::FILE* out = std::fopen(path, "w");
    if (!out) {
        std::fprintf(stderr, "cannot open %s\n", path);
        return 1;
    }
    for (double g : zeros) std::fprintf(out, "%.12f\n", g);
    std::fclose(out);
    std::fprintf(stderr, "wrote %zu zeros up to height %.6f\n", zeros.size(), zeros.back());
    return 0;
}
