#pragma once

#include <string>
#include <vector>

#include "cesaro/config.hpp"
#include "cesaro/terms.hpp"
#include "cesaro/zeros.hpp"

namespace cesaro {

struct ExperimentReport {
    ProblemConfig config;
    std::string zero_source_hash;
    std::size_t zero_count_used = 0;
    std::vector<TermBreakdown> rows;  // ascending N, one per configured N
    std::vector<std::string> notes;
    double wall_seconds = 0.0;
};

// Full pipeline: sieve, representation table, exact Cesaro side, M terms.
// Rows may be computed on parallel workers; each row is deterministic on its
// own, so the report is bit-identical for any thread count.
ExperimentReport run_experiment(const ProblemConfig& config, const ZetaZeroTable& zeros,
                                int threads = 1);

// Header: N,exact,M1,M2,M3,M4,M5,residual,predicted_scale,tail_M2,tail_M3,
// tail_M4,tail_M5. Values carry 17 significant digits; rows ascend in N.
std::string write_report_csv(const ExperimentReport& report);

}  // namespace cesaro
