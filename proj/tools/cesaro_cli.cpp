// Command-line front end.
//
//   cesaro verify   --config c.json --zeros z.txt [--out report.csv]
//                   [--threads n] [--tolerance x]
//   cesaro terms    --config c.json --zeros z.txt [--csv] [--threads n]
//   cesaro sieve    --kind lambda|repr --nmax N [--config c.json] [--out f.csv]
//   cesaro zeros validate --zeros z.txt
//   cesaro specfun selftest
//
// Exit codes: 0 ok, 1 configuration error, 2 data error, 3 numeric failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cesaro/bessel.hpp"
#include "cesaro/config.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/experiment.hpp"
#include "cesaro/gamma.hpp"
#include "cesaro/series.hpp"
#include "cesaro/terms.hpp"
#include "cesaro/zeros.hpp"

namespace {

using cesaro::Cplx;

void write_text_or_stdout(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cesaro::data_error("cannot open output file " + path);
    out << payload;
}

int run_verify(const std::string& config_path, const std::string& zeros_path,
               const std::string& out_path, int threads, double tolerance) {
    cesaro::ProblemConfig config = cesaro::load_config(config_path);
    if (tolerance > 0.0) config.series_tolerance = tolerance;
    cesaro::ZetaZeroTable zeros = cesaro::load_zeros(zeros_path);
    cesaro::validate_zeros(zeros);

    cesaro::ExperimentReport report = cesaro::run_experiment(config, zeros, threads);
    write_text_or_stdout(out_path, cesaro::write_report_csv(report));

    std::fprintf(stderr, "rows: %zu  zeros used: %zu (hash %s)  wall: %.2fs\n",
                 report.rows.size(), report.zero_count_used, report.zero_source_hash.c_str(),
                 report.wall_seconds);
    for (const auto& note : report.notes) std::fprintf(stderr, "note: %s\n", note.c_str());
    if (report.rows.size() >= 4 &&
        report.rows.back().n >= 10 * report.rows.front().n) {
        cesaro::TermContext ctx{config.spec, config.k, config.zero_height,
                                config.lattice_norm_max};
        cesaro::SlopeReport slope = cesaro::residual_analysis(report.rows, ctx);
        std::fprintf(stderr, "residual slope: %.4f  theorem exponent: %.4f  %s\n", slope.slope,
                     slope.exponent, slope.pass ? "ok" : "EXCEEDED");
    }
    return 0;
}

int run_terms(const std::string& config_path, const std::string& zeros_path,
              const std::string& out_path, int threads, bool csv) {
    cesaro::ProblemConfig config = cesaro::load_config(config_path);
    cesaro::ZetaZeroTable zeros = cesaro::load_zeros(zeros_path);
    cesaro::validate_zeros(zeros);

    cesaro::ExperimentReport report = cesaro::run_experiment(config, zeros, threads);
    std::string payload;
    char buf[640];
    if (csv) {
        payload = cesaro::write_report_csv(report);
    } else {
        std::snprintf(buf, sizeof buf,
                      "truncation: zero height %.6g (%zu zeros), lattice norm_max %.6g\n",
                      config.zero_height, report.zero_count_used, config.lattice_norm_max);
        payload += buf;
        for (const auto& row : report.rows) {
            std::snprintf(buf, sizeof buf,
                          "N %-10lld exact %.10e\n"
                          "  M1 %.10e   M2 %.10e (est_tail %.2e)\n"
                          "  M3 %.10e (est_tail %.2e)   M4 %.10e (est_tail %.2e)\n"
                          "  M5 %.10e (est_tail %.2e)\n"
                          "  residual %.10e   predicted_scale %.4e   tuples %lld   lattice pts %lld\n",
                          static_cast<long long>(row.n), row.exact_side, row.m1, row.m2,
                          row.est_tail_m2, row.m3, row.est_tail_m3, row.m4, row.est_tail_m4,
                          row.m5, row.est_tail_m5, row.residual, row.predicted_scale,
                          static_cast<long long>(row.zero_tuples_used),
                          static_cast<long long>(row.lattice_points_used));
            payload += buf;
        }
    }
    write_text_or_stdout(out_path, payload);
    return 0;
}

int run_sieve(const std::string& kind, long long n_max, const std::string& config_path,
              const std::string& out_path) {
    std::string payload = "n,value\n";
    char buf[64];
    if (kind == "lambda") {
        cesaro::VonMangoldtTable lambda = cesaro::sieve_von_mangoldt(n_max);
        for (long long n = 0; n <= n_max; ++n) {
            std::snprintf(buf, sizeof buf, "%lld,%.17g\n", n, lambda.values[std::size_t(n)]);
            payload += buf;
        }
    } else if (kind == "repr") {
        if (config_path.empty())
            throw cesaro::config_error("sieve --kind repr needs --config for (d,h,r)");
        cesaro::ProblemConfig config = cesaro::load_config(config_path);
        cesaro::VonMangoldtTable lambda = cesaro::sieve_von_mangoldt(n_max);
        cesaro::ReprTable table = cesaro::repr_counts(config.spec, n_max, lambda);
        for (long long n = 0; n <= n_max; ++n) {
            std::snprintf(buf, sizeof buf, "%lld,%.17g\n", n, table.values[std::size_t(n)]);
            payload += buf;
        }
    } else {
        throw cesaro::config_error("sieve: --kind must be lambda or repr");
    }
    write_text_or_stdout(out_path, payload);
    return 0;
}

int run_zeros_validate(const std::string& zeros_path) {
    cesaro::ZetaZeroTable table = cesaro::load_zeros(zeros_path);
    cesaro::ZeroDiagnostics diag = cesaro::validate_zeros(table);
    std::printf("zeros: %zu\n", diag.count);
    std::printf("source hash: %s\n", table.source_hash.c_str());
    std::printf("last height: %.9f\n", diag.last_height);
    std::printf("max |count - RvM estimate|: %.4f (gate: 2.0)\n", diag.max_counting_deviation);
    std::printf("gamma(n) log(n) / (2 pi n) at last entry: %.4f\n", diag.density_ratio);
    std::printf("validation: pass\n");
    return 0;
}

double check_gamma_recurrence_grid() {
    double worst = 0.0;
    for (double re = 0.1; re <= 5.0; re += 0.35)
        for (double im = -50.0; im <= 50.0; im += 4.0) {
            Cplx z(re, im);
            Cplx lhs = cesaro::complex_gamma(z + 1.0);
            Cplx rhs = z * cesaro::complex_gamma(z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
    return worst;
}

double check_bessel_recurrence_grid() {
    const Cplx orders[] = {{0.5, 0.0}, {1.0, 0.0}, {1.5, 1.0}, {2.0, 3.0}};
    const double args[] = {0.5, 1.0, 5.0, 20.0, 100.0};
    double worst = 0.0;
    for (Cplx v : orders)
        for (double u : args) {
            Cplx a = cesaro::bessel_j(v - 1.0, u).value;
            Cplx b = cesaro::bessel_j(v + 1.0, u).value;
            Cplx c = cesaro::bessel_j(v, u).value;
            worst = std::max(worst, std::abs(a + b - 2.0 * v / u * c) / (1.0 + std::abs(c)));
        }
    return worst;
}

double check_switch_agreement() {
    const Cplx orders[] = {{0.5, 0.0}, {1.0, 0.0}, {1.5, 1.0}, {2.0, 3.0}};
    double worst = 0.0;
    for (Cplx v : orders) {
        double u = cesaro::bessel_switch_point(v);
        Cplx s = cesaro::bessel_j_series(v, u).value;
        Cplx a = cesaro::bessel_j_asymptotic(v, u).value;
        worst = std::max(worst, std::abs(s - a) / std::abs(a));
    }
    return worst;
}

double check_quadrature_agreement() {
    struct Probe {
        Cplx v;
        double u;
        double a;
    };
    const Probe probes[] = {{{0.0, 0.0}, 1.0, 1.0}, {{0.5, 0.0}, std::numbers::pi, 1.0},
                            {{1.0, 2.0}, 10.0, 2.5}};
    double worst = 0.0;
    for (const Probe& p : probes) {
        Cplx q = cesaro::bessel_j_quadrature(p.v, p.u, p.a, 200.0);
        Cplx s = cesaro::bessel_j(p.v, p.u).value;
        worst = std::max(worst, std::abs(q - s));
    }
    return worst;
}

double check_pole_continuity() {
    double worst = 0.0;
    for (int n = 0; n <= 3; ++n)
        for (double eps : {1e-8, -1e-8})
            worst = std::max(worst, std::abs(cesaro::reciprocal_gamma(Cplx(-n + eps, 0.0))));
    return worst;
}

int run_selftest() {
    struct Row {
        const char* name;
        double value;
        double gate;
    };
    const Row rows[] = {
        {"gamma recurrence (rel)", check_gamma_recurrence_grid(), 1e-12},
        {"bessel three-term recurrence", check_bessel_recurrence_grid(), 1e-9},
        {"series/asymptotic switch (rel)", check_switch_agreement(), 1e-8},
        {"series vs quadrature (abs)", check_quadrature_agreement(), 1e-6},
        {"1/Gamma pole continuity", check_pole_continuity(), 1e-7},
    };
    bool ok = true;
    for (const Row& row : rows) {
        bool pass = row.value <= row.gate;
        ok = ok && pass;
        std::printf("%-34s max dev %.3e  (gate %.0e)  %s\n", row.name, row.value, row.gate,
                    pass ? "pass" : "FAIL");
    }
    if (!ok) throw cesaro::numeric_error("specfun selftest failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cesaro-weighted prime-power/square representation sums"};
    app.require_subcommand(1);

    std::string config_path, zeros_path, out_path, sieve_kind = "lambda";
    int threads = 1;
    double tolerance = 0.0;
    long long n_max = 100;
    bool terms_csv = false;

    CLI::App* verify = app.add_subcommand("verify", "full pipeline, CSV report");
    verify->add_option("--config", config_path)->required();
    verify->add_option("--zeros", zeros_path)->required();
    verify->add_option("--out", out_path);
    verify->add_option("--threads", threads);
    verify->add_option("--tolerance", tolerance);

    CLI::App* terms = app.add_subcommand("terms", "M-term breakdown only");
    terms->add_option("--config", config_path)->required();
    terms->add_option("--zeros", zeros_path)->required();
    terms->add_option("--out", out_path);
    terms->add_option("--threads", threads);
    terms->add_flag("--csv", terms_csv);

    CLI::App* sieve = app.add_subcommand("sieve", "dump Lambda or R tables as CSV");
    sieve->add_option("--kind", sieve_kind)->check(CLI::IsMember({"lambda", "repr"}));
    sieve->add_option("--nmax", n_max)->required();
    sieve->add_option("--config", config_path);
    sieve->add_option("--out", out_path);

    CLI::App* zeros_cmd = app.add_subcommand("zeros", "zero table utilities");
    zeros_cmd->require_subcommand(1);
    CLI::App* zeros_validate = zeros_cmd->add_subcommand("validate", "counting-function gate");
    zeros_validate->add_option("--zeros", zeros_path)->required();

    CLI::App* specfun = app.add_subcommand("specfun", "special function utilities");
    specfun->require_subcommand(1);
    specfun->add_subcommand("selftest", "run the invariant suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(config_path, zeros_path, out_path, threads, tolerance);
        if (terms->parsed()) return run_terms(config_path, zeros_path, out_path, threads, terms_csv);
        if (sieve->parsed()) return run_sieve(sieve_kind, n_max, config_path, out_path);
        if (zeros_cmd->parsed()) return run_zeros_validate(zeros_path);
        if (specfun->parsed()) return run_selftest();
    } catch (const cesaro::config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    } catch (const cesaro::data_error& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 2;
    } catch (const cesaro::numeric_error& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
