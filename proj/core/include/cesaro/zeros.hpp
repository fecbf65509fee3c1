#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cesaro {

// Positive imaginary parts of nontrivial zeta zeros, strictly ascending.
// beta is fixed to 1/2 for numerics: every zero in any published table lies
// on the critical line, and no numeric data exists otherwise. Reports carry
// this restriction in their metadata.
struct ZetaZeroTable {
    std::vector<double> gammas;
    std::string source_hash;  // FNV-1a 64 of the input bytes, hex
    static constexpr double beta = 0.5;

    std::size_t count_below(double t) const;
    double max_height() const { return gammas.empty() ? 0.0 : gammas.back(); }
};

struct ZeroDiagnostics {
    std::size_t count = 0;
    double max_counting_deviation = 0.0;  // vs Riemann-von Mangoldt estimate
    double last_height = 0.0;
    double density_ratio = 0.0;  // gamma(n) log(n) / (2 pi n) at the last entry
};

// Plain text, one positive decimal per line, ascending.
ZetaZeroTable load_zeros(const std::string& path);
ZetaZeroTable parse_zeros(const std::string& text, const std::string& origin);

// Riemann-von Mangoldt gate: the counting function must stay within +-2 of
// (T/2pi) log(T/(2 pi e)) + 7/8 at every stored height. Throws data_error on
// a corrupt or subsampled table.
ZeroDiagnostics validate_zeros(const ZetaZeroTable& table);

double riemann_von_mangoldt_estimate(double t);

// Estimate (not a bound) of sum_{gamma > T} gamma^{-s} via the density
// log(u/2pi)/(2pi):   int_T^inf u^{-s} log(u/2pi)/(2pi) du, closed form.
double zero_tail_estimate(double t, double s);

}  // namespace cesaro
