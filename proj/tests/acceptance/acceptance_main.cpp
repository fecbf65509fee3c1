// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Every tolerance is pinned here, in code. Criterion 8 is evaluated exactly
// as stated even though the comparison is known to sit below the crossover
// where the zero-term correction overtakes the secular O(N^k) part of the
// residual; see the printed diagnostics.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cesaro/bessel.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/experiment.hpp"
#include "cesaro/gamma.hpp"
#include "cesaro/series.hpp"

using namespace cesaro;

namespace {

constexpr double kPi = std::numbers::pi;
const std::string kDataDir = CESARO_TEST_DATA_DIR;

int g_failures = 0;

void report(int id, bool pass, double seconds, double budget, const std::string& detail) {
    bool ok = pass && seconds < budget;
    if (!ok) ++g_failures;
    std::printf("criterion %2d: %s  (%.2fs/%gs)  %s\n", id, ok ? "PASS" : "FAIL", seconds,
                budget, detail.c_str());
    std::fflush(stdout);
}

double run_timed(const std::function<void()>& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<SummandSpec>& named_specs() {
    static std::vector<SummandSpec> specs = {
        {1, 0, {1}}, {2, 0, {1, 1}}, {1, 1, {2}}, {1, 2, {3}}, {2, 1, {1, 2}}};
    return specs;
}

// ---- 1. repr_counts vs brute force, N = 2000, 1e-9 entrywise ----
void criterion_1() {
    bool pass = true;
    double worst = 0.0;
    double seconds = run_timed([&] {
        auto lambda = sieve_von_mangoldt(2000);
        for (const auto& spec : named_specs()) {
            auto fast = repr_counts(spec, 2000, lambda);
            auto slow = repr_counts_bruteforce(spec, 2000, lambda);
            for (std::size_t i = 0; i < fast.values.size(); ++i)
                worst = std::max(worst, std::fabs(fast.values[i] - slow.values[i]));
        }
        pass = worst <= 1e-9;
    });
    char buf[96];
    std::snprintf(buf, sizeof buf, "max |fast - brute| = %.3e", worst);
    report(1, pass, seconds, 30.0, buf);
}

// ---- 2. generating identity residual <= 1e-8 ----
void criterion_2() {
    bool pass = true;
    double worst = 0.0;
    double seconds = run_timed([&] {
        const Cplx zs[] = {{0.5, 0.0}, {0.3, 0.0}, {0.1, 0.2}};
        for (const auto& spec : named_specs())
            for (Cplx z : zs) {
                auto n_trunc = std::int64_t(std::lround(400.0 / z.real()));
                worst = std::max(worst, check_generating_identity(spec, z, n_trunc));
            }
        pass = worst <= 1e-8;
    });
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual = %.3e", worst);
    report(2, pass, seconds, 10.0, buf);
}

// ---- 3. theta functional equation <= 1e-10 on the 5x5 grid ----
void criterion_3() {
    double worst = 0.0;
    double seconds = run_timed([&] {
        for (double re : {0.1, 0.575, 1.05, 1.525, 2.0})
            for (double im : {-1.0, -0.5, 0.0, 0.5, 1.0})
                worst = std::max(worst, check_theta_functional_equation({re, im}));
    });
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual = %.3e", worst);
    report(3, worst <= 1e-10, seconds, 1.0, buf);
}

// ---- 4. special function invariants ----
void criterion_4() {
    double gamma_dev = 0.0, bessel_dev = 0.0, switch_dev = 0.0, quad_dev = 0.0;
    double seconds = run_timed([&] {
        for (double re = 0.1; re <= 5.0; re += 0.245)
            for (double im = -50.0; im <= 50.0; im += 2.5) {
                Cplx z(re, im);
                Cplx lhs = complex_gamma(z + 1.0);
                gamma_dev = std::max(gamma_dev,
                                     std::abs(lhs - z * complex_gamma(z)) / std::abs(lhs));
            }
        const Cplx orders[] = {{0.5, 0.0}, {1.0, 0.0}, {1.5, 1.0}, {2.0, 3.0}};
        for (Cplx v : orders) {
            for (double u : {0.5, 1.0, 5.0, 20.0, 100.0}) {
                Cplx a = bessel_j(v - 1.0, u).value;
                Cplx b = bessel_j(v + 1.0, u).value;
                Cplx c = bessel_j(v, u).value;
                bessel_dev = std::max(
                    bessel_dev, std::abs(a + b - 2.0 * v / u * c) / (1.0 + std::abs(c)));
            }
            double us = bessel_switch_point(v);
            Cplx s = bessel_j_series(v, us).value;
            Cplx a = bessel_j_asymptotic(v, us).value;
            switch_dev = std::max(switch_dev, std::abs(s - a) / std::abs(a));
        }
        quad_dev = std::abs(bessel_j_quadrature({0.0, 0.0}, 1.0, 1.0, 200.0) -
                            bessel_j({0.0, 0.0}, 1.0).value);
        quad_dev = std::max(quad_dev, std::abs(bessel_j_quadrature({0.5, 0.0}, kPi, 1.0, 200.0) -
                                               bessel_j({0.5, 0.0}, kPi).value));
        quad_dev = std::max(quad_dev, std::abs(bessel_j_quadrature({1.0, 2.0}, 10.0, 2.5, 200.0) -
                                               bessel_j({1.0, 2.0}, 10.0).value));
    });
    bool pass = gamma_dev <= 1e-12 && bessel_dev <= 1e-9 && switch_dev <= 1e-8 &&
                quad_dev <= 1e-6;
    char buf[160];
    std::snprintf(buf, sizeof buf, "gamma %.2e, bessel %.2e, switch %.2e, quad %.2e", gamma_dev,
                  bessel_dev, switch_dev, quad_dev);
    report(4, pass, seconds, 5.0, buf);
}

double leading_ratio(const SummandSpec& spec, double k, std::int64_t n) {
    auto lambda = sieve_von_mangoldt(n);
    auto table = repr_counts(spec, n, lambda);
    double exact = cesaro_average(table, n, k);
    return exact / eval_M1({spec, k}, double(n));
}

// ---- 5-7. leading-term convergence ----
void criterion_5() {
    double ratio = 0.0;
    double seconds = run_timed([&] { ratio = leading_ratio({1, 0, {1}}, 2.0, 500'000); });
    char buf[64];
    std::snprintf(buf, sizeof buf, "exact/M1 = %.6f", ratio);
    report(5, ratio >= 0.97 && ratio <= 1.03, seconds, 60.0, buf);
}

void criterion_6() {
    double ratio = 0.0;
    double seconds = run_timed([&] { ratio = leading_ratio({2, 0, {1, 1}}, 2.0, 200'000); });
    char buf[64];
    std::snprintf(buf, sizeof buf, "exact/M1 = %.6f", ratio);
    report(6, ratio >= 0.93 && ratio <= 1.07, seconds, 60.0, buf);
}

void criterion_7() {
    double ratio = 0.0;
    double seconds = run_timed([&] { ratio = leading_ratio({1, 1, {1}}, 2.0, 200'000); });
    char buf[64];
    std::snprintf(buf, sizeof buf, "exact/M1 = %.6f", ratio);
    report(7, ratio >= 0.95 && ratio <= 1.05, seconds, 90.0, buf);
}

// ---- 8. zero-term improvement on N in {2^13..2^17} with 100 zeros ----
void criterion_8() {
    double rms_with = 0.0, rms_without = 0.0;
    double seconds = run_timed([&] {
        auto zeros = load_zeros(kDataDir + "/zeros100.txt");
        TermContext ctx{{1, 0, {1}}, 2.0, zeros.max_height(), 40.0};
        auto lambda = sieve_von_mangoldt(1 << 17);
        auto table = repr_counts(ctx.spec, 1 << 17, lambda);
        for (int e = 13; e <= 17; ++e) {
            auto n = std::int64_t(1) << e;
            double exact = cesaro_average(table, n, ctx.k);
            double m1 = eval_M1(ctx, double(n));
            double m3 = eval_M3(ctx, double(n), zeros).value;
            double m5 = eval_M5(ctx, double(n), zeros).value;
            double scale = std::pow(double(n), ctx.k + 0.5);
            double with_m3 = (exact - m1 - m3 - m5) / scale;
            double without_m3 = (exact - m1 - m5) / scale;
            rms_with += with_m3 * with_m3;
            rms_without += without_m3 * without_m3;
        }
        rms_with = std::sqrt(rms_with / 5.0);
        rms_without = std::sqrt(rms_without / 5.0);
    });
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "RMS with M3 %.6e vs without %.6e (residual here is dominated by the "
                  "in-budget ~N^k secular term)",
                  rms_with, rms_without);
    report(8, rms_with < rms_without, seconds, 300.0, buf);
}

// ---- 9. residual exponent over a 5-point geometric grid ----
void criterion_9() {
    SlopeReport rep_a, rep_b;
    double seconds = run_timed([&] {
        auto zeros = load_zeros(kDataDir + "/zeros100.txt");
        {
            TermContext ctx{{1, 0, {1}}, 2.0, zeros.max_height(), 40.0};
            auto lambda = sieve_von_mangoldt(1 << 17);
            auto table = repr_counts(ctx.spec, 1 << 17, lambda);
            std::vector<TermBreakdown> rows;
            for (int e = 13; e <= 17; ++e) {
                auto n = std::int64_t(1) << e;
                rows.push_back(evaluate_terms(ctx, n, cesaro_average(table, n, ctx.k), zeros));
            }
            rep_a = residual_analysis(rows, ctx);
        }
        {
            // zero height 60 keeps every Bessel order inside the validity
            // envelope of the two evaluation methods at N >= 2^13
            TermContext ctx{{1, 1, {1}}, 2.0, 60.0, 40.0};
            auto lambda = sieve_von_mangoldt(1 << 17);
            auto table = repr_counts(ctx.spec, 1 << 17, lambda);
            std::vector<TermBreakdown> rows;
            for (int e = 13; e <= 17; ++e) {
                auto n = std::int64_t(1) << e;
                rows.push_back(evaluate_terms(ctx, n, cesaro_average(table, n, ctx.k), zeros));
            }
            rep_b = residual_analysis(rows, ctx);
        }
    });
    bool pass = rep_a.pass && rep_b.pass;
    char buf[160];
    std::snprintf(buf, sizeof buf, "slopes %.3f vs %.3f+0.15, %.3f vs %.3f+0.15", rep_a.slope,
                  rep_a.exponent, rep_b.slope, rep_b.exponent);
    report(9, pass, seconds, 600.0, buf);
}

// ---- 10. bit-identical reports across thread counts ----
void criterion_10() {
    bool pass = false;
    double seconds = run_timed([&] {
        auto config = load_config(kDataDir + "/goldbach_small.json");
        auto zeros = load_zeros(kDataDir + "/zeros100.txt");
        std::string one = write_report_csv(run_experiment(config, zeros, 1));
        std::string eight = write_report_csv(run_experiment(config, zeros, 8));
        pass = one == eight;
    });
    report(10, pass, seconds, 120.0, pass ? "CSV bytes identical" : "CSV bytes differ");
}

// ---- 11. zero-table validation gate ----
void criterion_11() {
    bool good_ok = false, bad_rejected = false;
    double seconds = run_timed([&] {
        auto good = load_zeros(kDataDir + "/zeros100.txt");
        good_ok = validate_zeros(good).count == 100;
        try {
            auto bad = load_zeros(kDataDir + "/zeros100_subsampled.txt");
            (void)validate_zeros(bad);
        } catch (const data_error&) {
            bad_rejected = true;
        }
    });
    report(11, good_ok && bad_rejected, seconds, 1.0,
           good_ok ? (bad_rejected ? "fixture passes, subsample rejected" : "subsample accepted!")
                   : "fixture rejected!");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
