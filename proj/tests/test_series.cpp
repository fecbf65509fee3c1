#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cesaro/mangoldt.hpp"
#include "cesaro/series.hpp"

using cesaro::check_generating_identity;
using cesaro::check_theta_functional_equation;
using cesaro::Cplx;
using cesaro::eval_omega2;
using cesaro::eval_prime_power_series;

namespace {
constexpr double kPi = std::numbers::pi;

// independent direct-summation oracle for S~_r at real argument
double prime_series_oracle(int r, double a, int m_cut) {
    auto lambda = cesaro::sieve_von_mangoldt(m_cut);
    long double acc = 0.0L;
    for (int m = 2; m <= m_cut; ++m)
        acc += (long double)lambda.values[std::size_t(m)] *
               std::exp(-(long double)std::pow((long double)m, r) * a);
    return double(acc);
}

}  // namespace

TEST_CASE("prime power series at z = 1") {
    auto s = eval_prime_power_series(1, {1.0, 0.0}, 1e-12);
    CHECK(s.value.real() == doctest::Approx(0.174232299513946).epsilon(1e-12));  // oracle-frozen
    CHECK(s.value.imag() == 0.0);
    CHECK(s.value.real() == doctest::Approx(prime_series_oracle(1, 1.0, 120)).epsilon(1e-13));
    CHECK(s.tail_bound <= 1e-12);
}

TEST_CASE("prime power series tracks the PNT scale as a -> 0+") {
    // S~_r(a) ~ Gamma(1/r)/(r a^{1/r}); at r=1 the ratio to 1/a is within 10%
    double a = 0.001;
    auto s = eval_prime_power_series(1, {a, 0.0}, 1e-10);
    CHECK(std::fabs(s.value.real() * a - 1.0) < 0.10);
}

TEST_CASE("prime power series domain and realness") {
    CHECK_THROWS_AS((void)eval_prime_power_series(1, {-0.5, 0.0}, 1e-10), std::domain_error);
    CHECK_THROWS_AS((void)eval_prime_power_series(0, {1.0, 0.0}, 1e-10), std::domain_error);
    auto s = eval_prime_power_series(2, {0.7, 0.0}, 1e-12);
    CHECK(s.value.imag() == 0.0);
    CHECK(s.value.real() == doctest::Approx(prime_series_oracle(2, 0.7, 50)).epsilon(1e-13));
}

TEST_CASE("omega2 reference value and bounds") {
    auto w = eval_omega2({1.0, 0.0}, 1e-14);
    CHECK(w.value.real() == doctest::Approx(0.386318602413326).epsilon(1e-12));  // oracle-frozen

    // |omega2(z)| <= omega2(Re z)
    for (Cplx z : {Cplx(0.5, 0.8), Cplx(1.0, -2.0), Cplx(0.2, 5.0)}) {
        double bound = eval_omega2({z.real(), 0.0}, 1e-14).value.real();
        CHECK(std::abs(eval_omega2(z, 1e-14).value) <= bound * (1.0 + 1e-12));
    }

    CHECK(eval_omega2({50.0, 0.0}, 1e-18).value.real() < 1e-20);
}

TEST_CASE("theta functional equation") {
    SUBCASE("spec anchor points") {
        CHECK(check_theta_functional_equation({1.0, 0.0}) <= 1e-12);
        CHECK(check_theta_functional_equation({0.1, 0.0}) <= 1e-12);
        CHECK(check_theta_functional_equation({1.0, 1.0}) <= 1e-10);
    }
    SUBCASE("5x5 grid") {
        for (double re : {0.1, 0.575, 1.05, 1.525, 2.0})
            for (double im : {-1.0, -0.5, 0.0, 0.5, 1.0})
                CHECK(check_theta_functional_equation({re, im}) <= 1e-10);
    }
    SUBCASE("right-hand side pieces match the direct sums") {
        double lhs = eval_omega2({1.0, 0.0}, 1e-15).value.real();
        double root = std::sqrt(kPi);
        double rhs = 0.5 * root - 0.5 + root * 0.000051723186203819;  // oracle omega2(pi^2)
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("generating identity") {
    CHECK(check_generating_identity({1, 0, {1}}, {0.5, 0.0}, 200) <= 1e-10);
    CHECK(check_generating_identity({2, 1, {1, 2}}, {0.3, 0.0}, 400) <= 1e-8);
    CHECK(check_generating_identity({1, 2, {3}}, {0.5, 0.0}, 200) <= 1e-10);
    // complex abscissa
    CHECK(check_generating_identity({2, 0, {1, 1}}, {0.4, 0.3}, 300) <= 1e-9);
}
