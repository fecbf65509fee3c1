#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cesaro/repr.hpp"

namespace cesaro {

struct ProblemConfig {
    SummandSpec spec;                    // r sorted non-decreasing on load
    double k = 2.0;
    std::vector<std::int64_t> n_values;  // ascending, deduplicated
    double zero_height = 240.0;          // zero_count_T
    double lattice_norm_max = 40.0;
    double series_tolerance = 1e-10;
    bool theorem_regime = false;         // k > (d+h)/2
    std::vector<std::string> warnings;
};

// Flat key-value JSON document. Required: d, h, r, k, N_values. Optional:
// zero_count_T, lattice_norm_max, series_tolerance. k <= (d+h)/2 is accepted
// with a prominent warning (exploration outside the proven regime).
ProblemConfig parse_config(const std::string& json_text);

ProblemConfig load_config(const std::string& path);

}  // namespace cesaro
