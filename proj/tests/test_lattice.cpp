#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "cesaro/bessel.hpp"
#include "cesaro/lattice.hpp"

using cesaro::bessel_j;
using cesaro::Cplx;
using cesaro::eval_bessel_lattice_sum;
using cesaro::make_shell_table;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("shell counts") {
    auto one = make_shell_table(1, 100);
    CHECK(one.counts[1] == 1.0);
    CHECK(one.counts[4] == 1.0);
    CHECK(one.counts[2] == 0.0);

    auto two = make_shell_table(2, 100);
    CHECK(two.counts[2] == 1.0);  // (1,1)
    CHECK(two.counts[5] == 2.0);  // (1,2),(2,1)
    CHECK(two.counts[3] == 0.0);
    CHECK(two.counts[25] == 2.0);  // (3,4),(4,3); (5,0) excluded: components >= 1
    CHECK(two.counts[50] == 3.0);  // (1,7),(7,1),(5,5)
}

TEST_CASE("one-dimensional sum matches a direct Bessel loop") {
    // h-eta = 1, nu = x + k + (1+ell)/2 = 3.5 at x=1, k=2, ell=0, N=4
    double n = 4.0;
    auto lat = eval_bessel_lattice_sum({1.0, 0.0}, 2.0, 1, 0, 0, n, 60.0);

    long double direct = 0.0L;
    for (int f = 1; f <= 200; ++f)
        direct += bessel_j({3.5, 0.0}, 2.0 * kPi * std::sqrt(n) * f).value.real() /
                  std::pow((long double)f, 3.5L);
    double expected = double(direct) * std::pow(n, 0.25);
    CHECK(std::fabs(lat.value.real() - expected) <= 1e-8 + lat.est_tail);
    CHECK(lat.value.imag() == 0.0);
    CHECK(lat.points_used == 60);
}

TEST_CASE("doubling norm_max moves the value by less than the reported tail") {
    for (double norm_max : {20.0, 40.0}) {
        auto a = eval_bessel_lattice_sum({1.0, 0.0}, 2.0, 2, 0, 1, 9.0, norm_max);
        auto b = eval_bessel_lattice_sum({1.0, 0.0}, 2.0, 2, 0, 1, 9.0, 2.0 * norm_max);
        CHECK(std::abs(a.value - b.value) <= a.est_tail);
    }
}

TEST_CASE("complex order carries the scale out") {
    Cplx x(0.5, 14.134725);
    auto lat = eval_bessel_lattice_sum(x, 3.0, 1, 0, 0, 25.0, 20.0);
    CHECK(std::isfinite(lat.value.real()));
    CHECK(std::isfinite(lat.value.imag()));
    CHECK(std::abs(lat.value) > 0.0);
}

TEST_CASE("divergent parameter combinations are refused by name") {
    try {
        (void)eval_bessel_lattice_sum({0.0, 0.0}, 0.2, 1, 0, 0, 16.0, 20.0);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("Re(x)+k+(h-eta+ell)/2") != std::string::npos);
    }
    CHECK_THROWS_AS((void)eval_bessel_lattice_sum({1.0, 0.0}, 2.0, 1, 1, 0, 16.0, 20.0),
                    std::domain_error);  // h - eta = 0
}
