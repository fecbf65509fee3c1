#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "cesaro/gamma.hpp"

using cesaro::Cplx;
using cesaro::complex_gamma;
using cesaro::log_gamma;
using cesaro::reciprocal_gamma;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gamma at small real arguments") {
    CHECK(complex_gamma({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(complex_gamma({0.5, 0.0}).real() ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(complex_gamma({5.0, 0.0}).imag() == 0.0);
}

TEST_CASE("gamma modulus on the critical line matches the cosh identity") {
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    double y = 14.134725;
    double expected = std::sqrt(kPi / std::cosh(kPi * y));
    CHECK(std::abs(complex_gamma({0.5, y})) == doctest::Approx(expected).epsilon(1e-12));

    // Stirling prediction sqrt(2 pi) e^{-pi y/2} y^{x-1/2} with x = 1/2
    double stirling = std::sqrt(2.0 * kPi) * std::exp(-kPi * y / 2.0);
    CHECK(std::abs(stirling / expected - 1.0) < 0.01);
}

TEST_CASE("gamma recurrence on the acceptance grid") {
    double worst = 0.0;
    for (double re = 0.1; re <= 5.0; re += 0.245)
        for (double im = -50.0; im <= 50.0; im += 2.5) {
            Cplx z(re, im);
            Cplx lhs = complex_gamma(z + 1.0);
            Cplx rhs = z * complex_gamma(z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
    CHECK(worst <= 1e-12);
}

TEST_CASE("log gamma recurrence at large imaginary part") {
    // the direct values underflow around |Im z| ~ 450; the log form must not
    for (double im : {200.0, 1419.4}) {
        Cplx z(0.25, im);
        Cplx dev = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
        CHECK(std::abs(dev) < 1e-11);
    }
}

TEST_CASE("conjugate symmetry") {
    for (Cplx z : {Cplx(0.3, 7.0), Cplx(2.5, -40.0), Cplx(0.25, 14.1)}) {
        Cplx a = complex_gamma(std::conj(z));
        Cplx b = std::conj(complex_gamma(z));
        CHECK(std::abs(a - b) <= 1e-13 * std::abs(b));
    }
}

TEST_CASE("gamma pole raises, reciprocal does not") {
    CHECK_THROWS_AS((void)complex_gamma({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS((void)complex_gamma({-3.0, 0.0}), std::domain_error);
    CHECK(reciprocal_gamma({0.0, 0.0}) == Cplx(0.0, 0.0));
    CHECK(reciprocal_gamma({-7.0, 0.0}) == Cplx(0.0, 0.0));
    CHECK(reciprocal_gamma({4.0, 0.0}).real() == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("reciprocal gamma is continuous across the poles") {
    for (int n = 0; n <= 3; ++n)
        for (double eps : {1e-8, -1e-8})
            CHECK(std::abs(reciprocal_gamma({double(-n) + eps, 0.0})) <= 1e-7);
}

TEST_CASE("reciprocal gamma matches the recurrence at a zero ordinate") {
    // 1/Gamma(3+rho) = 1/(rho (rho+1) (rho+2) Gamma(rho))
    Cplx rho(0.5, 14.134725);
    Cplx direct = reciprocal_gamma(rho + 3.0);
    Cplx via_recurrence = reciprocal_gamma(rho) / (rho * (rho + 1.0) * (rho + 2.0));
    CHECK(std::abs(direct - via_recurrence) <= 1e-12 * std::abs(direct));
}
