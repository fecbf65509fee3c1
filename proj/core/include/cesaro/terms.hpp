#pragma once

#include <cstdint>
#include <vector>

#include "cesaro/repr.hpp"
#include "cesaro/zero_sum.hpp"
#include "cesaro/zeros.hpp"

namespace cesaro {

// Truncation knobs shared by every term evaluator.
struct TermContext {
    SummandSpec spec;
    double k = 2.0;
    double zero_height = 240.0;     // include zeros with gamma <= this
    double lattice_norm_max = 40.0;  // stop lattice shells at |f| > this
};

struct TermValue {
    double value = 0.0;
    double est_tail = 0.0;
    std::int64_t zero_tuples = 0;
    std::int64_t lattice_points = 0;
};

struct TermBreakdown {
    std::int64_t n = 0;
    double exact_side = 0.0;
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0, m5 = 0.0;
    double est_tail_m2 = 0.0, est_tail_m3 = 0.0, est_tail_m4 = 0.0, est_tail_m5 = 0.0;
    double residual = 0.0;        // exact - ((((M1+M2)+M3)+M4)+M5), this order
    double predicted_scale = 0.0;  // N^{k + h/2 + tau(r,D) - 1/r_d}
    std::int64_t zero_tuples_used = 0;
    std::int64_t lattice_points_used = 0;
};

// Closed-form main term; no truncation.
double eval_M1(const TermContext& ctx, double n);

// Bessel lattice term of the main part (zero when h = 0).
TermValue eval_M2(const TermContext& ctx, double n);

// d-fold zero sum with reciprocal-Gamma weights.
TermValue eval_M3(const TermContext& ctx, double n, const ZetaZeroTable& zeros, int threads = 1);

// d-fold zero sum with a Bessel lattice sum inside each coefficient
// (zero when h = 0).
TermValue eval_M4(const TermContext& ctx, double n, const ZetaZeroTable& zeros, int threads = 1);

// Mixed subset terms: proper nonempty I carry the main-term factors
// Gamma(1/r_i)/r_i while the complement carries a |D\I|-fold zero sum; the
// eta = h slice uses the reciprocal-Gamma closed form, eta < h the Bessel
// lattice form. Identically zero for d = 1.
TermValue eval_M5(const TermContext& ctx, double n, const ZetaZeroTable& zeros, int threads = 1);

double theorem_error_exponent(const TermContext& ctx);

// Per-component polynomial decay of the zero-sum coefficients in the
// (k_eff, eta, ell) slice: Stirling cancels the exponential factors and
// leaves a joint power k_eff + (h-eta+ell)/2 + tau(r,J)/2 + 1/2, split
// evenly across components by AM-GM. Feeds zero_tail_estimate.
std::vector<double> zero_sum_decay_exponents(double k_eff, int h, int eta, int ell,
                                             const std::vector<int>& r_components);

TermBreakdown evaluate_terms(const TermContext& ctx, std::int64_t n, double exact_side,
                             const ZetaZeroTable& zeros, int threads = 1);

struct SlopeReport {
    double slope = 0.0;
    double exponent = 0.0;
    bool pass = false;
    int points_used = 0;
    std::vector<std::int64_t> excluded;  // rows with residual exactly 0
};

// Least-squares slope of log|residual| against log N over a geometric grid
// (>= 4 points spanning at least a decade). Passes when the slope does not
// exceed the theorem exponent by more than 0.15.
SlopeReport residual_analysis(const std::vector<TermBreakdown>& rows, const TermContext& ctx);

}  // namespace cesaro
