#include "cesaro/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

#include "cesaro/errors.hpp"

namespace cesaro {

ExperimentReport run_experiment(const ProblemConfig& config, const ZetaZeroTable& zeros,
                                int threads) {
    auto start = std::chrono::steady_clock::now();
    if (config.zero_height > zeros.max_height())
        throw numeric_error("run_experiment: zero table reaches height " +
                            std::to_string(zeros.max_height()) + " but zero_count_T = " +
                            std::to_string(config.zero_height) + " is required");

    ExperimentReport report;
    report.config = config;
    report.zero_source_hash = zeros.source_hash;
    report.zero_count_used = zeros.count_below(config.zero_height);
    report.notes = config.warnings;
    report.notes.push_back("zero ordinates treated with beta = 1/2 (critical line)");
    report.notes.push_back("tail columns are density estimates, not rigorous bounds");

    std::int64_t n_max = config.n_values.back();
    VonMangoldtTable lambda = sieve_von_mangoldt(n_max);
    ReprTable table = repr_counts(config.spec, n_max, lambda);

    TermContext ctx{config.spec, config.k, config.zero_height, config.lattice_norm_max};
    report.rows.resize(config.n_values.size());

    auto compute_row = [&](std::size_t i, int inner_threads) {
        std::int64_t n = config.n_values[i];
        double exact = cesaro_average(table, n, config.k);
        report.rows[i] = evaluate_terms(ctx, n, exact, zeros, inner_threads);
    };

    if (threads > 1 && config.n_values.size() > 1) {
        std::vector<std::future<void>> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= report.rows.size()) return;
                    compute_row(i, 1);
                }
            }));
        for (auto& f : pool) f.get();
    } else {
        for (std::size_t i = 0; i < report.rows.size(); ++i) compute_row(i, threads);
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string write_report_csv(const ExperimentReport& report) {
    if (report.rows.empty()) throw std::domain_error("write_report_csv: empty report");
    std::string out =
        "N,exact,M1,M2,M3,M4,M5,residual,predicted_scale,tail_M2,tail_M3,tail_M4,tail_M5\n";
    char buf[512];
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof buf,
                      "%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                      "%.17g\n",
                      static_cast<long long>(row.n), row.exact_side, row.m1, row.m2, row.m3,
                      row.m4, row.m5, row.residual, row.predicted_scale, row.est_tail_m2,
                      row.est_tail_m3, row.est_tail_m4, row.est_tail_m5);
        out += buf;
    }
    return out;
}

}  // namespace cesaro
