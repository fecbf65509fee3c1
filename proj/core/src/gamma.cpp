#include "cesaro/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))

// Godfrey's 15-term Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool is_nonpositive_integer(Cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma for Re z >= 1/2 only.
Cplx log_gamma_right(Cplx z) {
    Cplx series(kLanczos[0], 0.0);
    for (int i = 1; i < 15; ++i) series += kLanczos[i] / (z + double(i - 1));
    Cplx t = z + (kLanczosG - 0.5);
    return kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Cplx log_sin_pi(Cplx z) {
    double y = z.imag();
    if (std::fabs(y) < 10.0) return std::log(std::sin(kPi * z));
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i); for Im z > 0 the
    // remaining exponential is tiny, so expand through log1p.
    if (y > 0.0) {
        Cplx w = std::exp(Cplx(0.0, 2.0 * kPi) * z);  // |w| = e^{-2 pi y} << 1
        return Cplx(0.0, -kPi) * z + std::log(-(1.0 - w)) - Cplx(std::log(2.0), kPi / 2.0);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

Cplx log_gamma(Cplx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Cplx complex_gamma(Cplx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("complex_gamma: pole at non-positive integer");
    if (z.imag() == 0.0 && z.real() > 0.0) return Cplx(std::tgamma(z.real()), 0.0);
    return std::exp(log_gamma(z));
}

Cplx reciprocal_gamma(Cplx z) {
    if (is_nonpositive_integer(z)) return Cplx(0.0, 0.0);
    if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi: entire, smooth across the poles.
    return std::exp(log_sin_pi(z) + log_gamma_right(1.0 - z) - std::log(kPi));
}

}  // namespace cesaro
