#pragma once

#include <cstdint>
#include <vector>

#include "cesaro/mangoldt.hpp"

namespace cesaro {

// The (d, h, r) shape of a representation problem: d prime-power summands
// m_j^{r_j}, h square summands t_i^2 with t_i >= 1 (matching omega_2).
struct SummandSpec {
    int d = 1;
    int h = 0;
    std::vector<int> r;  // d entries, non-decreasing
};

// values[n] = sum over m_1^{r_1}+...+m_d^{r_d}+t_1^2+...+t_h^2 = n of
// Lambda(m_1)...Lambda(m_d), n = 0..N.
struct ReprTable {
    std::int64_t n_max = 0;
    SummandSpec spec;
    std::vector<double> values;
};

// Iterated convolution: fold the d prime-power sequences first, then the h
// square indicators. Per-cell compensated summation, index-ascending order.
ReprTable repr_counts(const SummandSpec& spec, std::int64_t n_max, const VonMangoldtTable& lambda);

// Direct nested enumeration; oracle for repr_counts, refuses N > 5000.
ReprTable repr_counts_bruteforce(const SummandSpec& spec, std::int64_t n_max,
                                 const VonMangoldtTable& lambda);

// sum_{n<=N} values[n] (N-n)^k / Gamma(k+1), compensated, ascending n.
double cesaro_average(const ReprTable& table, std::int64_t n, double k);

}  // namespace cesaro
