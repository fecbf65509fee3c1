#include "cesaro/terms.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cesaro/accum.hpp"
#include "cesaro/gamma.hpp"
#include "cesaro/lattice.hpp"
#include "cesaro/subsets.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;

double gamma_factor_product(const std::vector<int>& r, std::uint32_t mask) {
    double acc = 1.0;
    for (std::size_t j = 0; j < r.size(); ++j)
        if (mask & (1u << j)) acc *= std::tgamma(1.0 / r[j]) / r[j];
    return acc;
}

double parity(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// log of prod_j Gamma(rho_j/r_j)/r_j for one zero index and sign, cached per
// distinct exponent r. Conjugate symmetry handles the negative sign.
struct GammaLogCache {
    std::vector<int> r_values;          // distinct r present
    std::vector<std::vector<Cplx>> lg;  // [r slot][zero index]

    GammaLogCache(const std::vector<int>& r_components, const ZetaZeroTable& zeros,
                  std::size_t count) {
        for (int r : r_components) {
            if (slot_of(r) >= 0) continue;
            r_values.push_back(r);
            std::vector<Cplx> column(count);
            for (std::size_t i = 0; i < count; ++i) {
                Cplx rho_over_r(0.5 / r, zeros.gammas[i] / r);
                column[i] = log_gamma(rho_over_r) - std::log(double(r));
            }
            lg.push_back(std::move(column));
        }
    }

    int slot_of(int r) const {
        for (std::size_t i = 0; i < r_values.size(); ++i)
            if (r_values[i] == r) return int(i);
        return -1;
    }

    Cplx sum_for(const ZeroTupleView& view, const std::vector<int>& r_components) const {
        Cplx acc(0.0, 0.0);
        for (int j = 0; j < view.dim; ++j) {
            Cplx v = lg[std::size_t(slot_of(r_components[std::size_t(j)]))][view.index[j]];
            acc += view.sign[j] > 0 ? v : std::conj(v);
        }
        return acc;
    }
};

std::vector<int> complement_components(const std::vector<int>& r, std::uint32_t mask_i) {
    std::vector<int> out;
    for (std::size_t j = 0; j < r.size(); ++j)
        if (!(mask_i & (1u << j))) out.push_back(r[j]);
    return out;
}

}  // namespace

double theorem_error_exponent(const TermContext& ctx) {
    return ctx.k + ctx.spec.h / 2.0 + tau_ones(ctx.spec.r, full_mask(ctx.spec.r.size())) -
           1.0 / ctx.spec.r.back();
}

std::vector<double> zero_sum_decay_exponents(double k_eff, int h, int eta, int ell,
                                             const std::vector<int>& r_components) {
    double tau_j = 0.0;
    for (int r : r_components) tau_j += 1.0 / r;
    double p_joint = k_eff + (h - eta + ell) / 2.0 + tau_j / 2.0 + 0.5;
    std::vector<double> s;
    s.reserve(r_components.size());
    for (int r : r_components)
        s.push_back(p_joint / double(r_components.size()) + 0.5 - 0.5 / double(r));
    return s;
}

double eval_M1(const TermContext& ctx, double n) {
    const auto& r = ctx.spec.r;
    int h = ctx.spec.h;
    double tau_d = tau_ones(r, full_mask(r.size()));
    KahanSum sum;
    for (int ell = 0; ell <= h; ++ell) {
        double term = binomial(h, ell) * std::pow(kPi, ell / 2.0) * parity(h - ell) *
                      std::pow(n, ctx.k + tau_d + ell / 2.0) /
                      std::tgamma(ctx.k + 1.0 + tau_d + ell / 2.0);
        sum.add(term);
    }
    return sum.value() * gamma_factor_product(r, full_mask(r.size())) / std::pow(2.0, h);
}

TermValue eval_M2(const TermContext& ctx, double n) {
    int h = ctx.spec.h;
    if (h == 0) return {};
    const auto& r = ctx.spec.r;
    double tau_d = tau_ones(r, full_mask(r.size()));
    double prefactor = std::pow(n, (ctx.k + tau_d) / 2.0) / std::pow(kPi, ctx.k + tau_d) *
                       gamma_factor_product(r, full_mask(r.size()));
    auto q_max = std::int64_t(ctx.lattice_norm_max * ctx.lattice_norm_max);

    TermValue out;
    KahanSum sum;
    for (int eta = 0; eta <= h - 1; ++eta) {
        ShellTable shells = make_shell_table(h - eta, q_max);
        for (int ell = 0; ell <= eta; ++ell) {
            double weight = binomial(h, eta) / std::pow(2.0, eta) * binomial(eta, ell) *
                            parity(eta - ell);
            LatticeSumResult lat = eval_bessel_lattice_sum_scaled(
                Cplx(tau_d, 0.0), ctx.k, h, eta, ell, n, ctx.lattice_norm_max, shells);
            sum.add(prefactor * weight * lat.value.real());  // real order: Im == 0
            out.est_tail += std::fabs(prefactor * weight) * lat.est_tail;
            out.lattice_points += lat.points_used;
        }
    }
    out.value = sum.value();
    return out;
}

TermValue eval_M3(const TermContext& ctx, double n, const ZetaZeroTable& zeros, int threads) {
    const auto& r = ctx.spec.r;
    int d = ctx.spec.d, h = ctx.spec.h;
    double log_n = std::log(n);
    std::size_t count = zeros.count_below(ctx.zero_height);
    GammaLogCache cache(r, zeros, count);

    TermValue out;
    KahanSum sum;
    for (int ell = 0; ell <= h; ++ell) {
        double denom_shift = ctx.k + 1.0 + ell / 2.0;
        TupleCoeff coeff = [&](const ZeroTupleView& view) -> std::pair<Cplx, double> {
            Cplx tau_rho = view.tau_rho();
            Cplx log_c = cache.sum_for(view, r) + tau_rho * log_n -
                         log_gamma(denom_shift + tau_rho);
            return {std::exp(log_c), 0.0};
        };
        ZeroTailModel model{zero_sum_decay_exponents(ctx.k, h, h, ell, r)};
        ZeroTupleSumResult zs =
            eval_zero_tuple_sum(d, coeff, zeros, ctx.zero_height, r, model, threads);
        double prefactor = std::pow(n, ctx.k) * parity(d) / std::pow(2.0, h) * binomial(h, ell) *
                           std::pow(n * kPi, ell / 2.0) * parity(h - ell);
        sum.add(prefactor * zs.value.real());
        out.est_tail += std::fabs(prefactor) * zs.est_tail;
        out.zero_tuples += zs.tuples_used;
    }
    out.value = sum.value();
    return out;
}

TermValue eval_M4(const TermContext& ctx, double n, const ZetaZeroTable& zeros, int threads) {
    int h = ctx.spec.h;
    if (h == 0) return {};
    const auto& r = ctx.spec.r;
    int d = ctx.spec.d;
    double log_n = std::log(n);
    double log_pi = std::log(kPi);
    auto q_max = std::int64_t(ctx.lattice_norm_max * ctx.lattice_norm_max);
    std::size_t count = zeros.count_below(ctx.zero_height);
    GammaLogCache cache(r, zeros, count);

    TermValue out;
    KahanSum sum;
    for (int eta = 0; eta <= h - 1; ++eta) {
        ShellTable shells = make_shell_table(h - eta, q_max);
        for (int ell = 0; ell <= eta; ++ell) {
            std::atomic<std::int64_t> lattice_points{0};
            TupleCoeff coeff = [&](const ZeroTupleView& view) -> std::pair<Cplx, double> {
                Cplx tau_rho = view.tau_rho();
                LatticeSumResult lat = eval_bessel_lattice_sum_scaled(
                    tau_rho, ctx.k, h, eta, ell, n, ctx.lattice_norm_max, shells);
                lattice_points.fetch_add(lat.points_used, std::memory_order_relaxed);
                Cplx factor = std::exp(cache.sum_for(view, r) +
                                       tau_rho * (log_n / 2.0 - log_pi) + lat.log_scale);
                return {factor * lat.value, std::abs(factor) * lat.est_tail};
            };
            ZeroTailModel model{zero_sum_decay_exponents(ctx.k, h, eta, ell, r)};
            ZeroTupleSumResult zs =
                eval_zero_tuple_sum(d, coeff, zeros, ctx.zero_height, r, model, threads);
            double prefactor = std::pow(n, ctx.k / 2.0) * parity(d) / std::pow(kPi, ctx.k) *
                               binomial(h, eta) / std::pow(2.0, eta) * binomial(eta, ell) *
                               parity(eta - ell);
            sum.add(prefactor * zs.value.real());
            out.est_tail += std::fabs(prefactor) * (zs.est_tail + zs.aux_tail);
            out.zero_tuples += zs.tuples_used;
            out.lattice_points += lattice_points.load();
        }
    }
    out.value = sum.value();
    return out;
}

TermValue eval_M5(const TermContext& ctx, double n, const ZetaZeroTable& zeros, int threads) {
    const auto& r = ctx.spec.r;
    int d = ctx.spec.d, h = ctx.spec.h;
    if (d == 1) return {};  // no proper nonempty subsets
    double log_n = std::log(n);
    double log_pi = std::log(kPi);
    auto q_max = std::int64_t(ctx.lattice_norm_max * ctx.lattice_norm_max);
    std::size_t count = zeros.count_below(ctx.zero_height);
    GammaLogCache cache(r, zeros, count);

    TermValue out;
    KahanSum sum;
    std::uint32_t full = full_mask(std::size_t(d));
    for (std::uint32_t mask = 1; mask < full; ++mask) {  // 1 <= |I| <= d-1
        int size_i = std::popcount(mask);
        std::vector<int> r_j = complement_components(r, mask);
        double tau_i = tau_ones(r, mask);
        double subset_factor = parity(d - size_i) * gamma_factor_product(r, mask);

        for (int eta = 0; eta <= h; ++eta) {
            ShellTable shells;
            if (eta < h) shells = make_shell_table(h - eta, q_max);
            for (int ell = 0; ell <= eta; ++ell) {
                double weight = binomial(h, eta) / std::pow(2.0, eta) * binomial(eta, ell) *
                                parity(eta - ell);
                ZeroTailModel model{
                    zero_sum_decay_exponents(ctx.k + tau_i, h, eta, ell, r_j)};
                double prefactor;
                ZeroTupleSumResult zs;
                std::int64_t lat_points = 0;
                if (eta == h) {
                    // lattice dimension 0: reciprocal-Gamma closed form
                    double denom_shift = ctx.k + 1.0 + tau_i + ell / 2.0;
                    TupleCoeff coeff = [&](const ZeroTupleView& view) -> std::pair<Cplx, double> {
                        Cplx tau_rho = view.tau_rho();
                        Cplx log_c = cache.sum_for(view, r_j) + tau_rho * log_n -
                                     log_gamma(denom_shift + tau_rho);
                        return {std::exp(log_c), 0.0};
                    };
                    zs = eval_zero_tuple_sum(d - size_i, coeff, zeros, ctx.zero_height, r_j,
                                             model, threads);
                    prefactor = subset_factor * weight * std::pow(kPi, ell / 2.0) *
                                std::pow(n, ctx.k + tau_i + ell / 2.0);
                } else {
                    std::atomic<std::int64_t> lattice_points{0};
                    TupleCoeff coeff = [&](const ZeroTupleView& view) -> std::pair<Cplx, double> {
                        Cplx tau_rho = view.tau_rho();
                        LatticeSumResult lat = eval_bessel_lattice_sum_scaled(
                            tau_rho, ctx.k + tau_i, h, eta, ell, n, ctx.lattice_norm_max,
                            shells);
                        lattice_points.fetch_add(lat.points_used, std::memory_order_relaxed);
                        Cplx factor = std::exp(cache.sum_for(view, r_j) +
                                               tau_rho * (log_n / 2.0 - log_pi) + lat.log_scale);
                        return {factor * lat.value, std::abs(factor) * lat.est_tail};
                    };
                    zs = eval_zero_tuple_sum(d - size_i, coeff, zeros, ctx.zero_height, r_j,
                                             model, threads);
                    lat_points = lattice_points.load();
                    prefactor = subset_factor * weight *
                                std::pow(n, (ctx.k + tau_i) / 2.0) /
                                std::pow(kPi, ctx.k + tau_i);
                }
                sum.add(prefactor * zs.value.real());
                out.est_tail += std::fabs(prefactor) * (zs.est_tail + zs.aux_tail);
                out.zero_tuples += zs.tuples_used;
                out.lattice_points += lat_points;
            }
        }
    }
    out.value = sum.value();
    return out;
}

TermBreakdown evaluate_terms(const TermContext& ctx, std::int64_t n, double exact_side,
                             const ZetaZeroTable& zeros, int threads) {
    TermBreakdown row;
    row.n = n;
    row.exact_side = exact_side;
    double nd = double(n);
    row.m1 = eval_M1(ctx, nd);
    TermValue m2 = eval_M2(ctx, nd);
    TermValue m3 = eval_M3(ctx, nd, zeros, threads);
    TermValue m4 = eval_M4(ctx, nd, zeros, threads);
    TermValue m5 = eval_M5(ctx, nd, zeros, threads);
    row.m2 = m2.value;
    row.m3 = m3.value;
    row.m4 = m4.value;
    row.m5 = m5.value;
    row.est_tail_m2 = m2.est_tail;
    row.est_tail_m3 = m3.est_tail;
    row.est_tail_m4 = m4.est_tail;
    row.est_tail_m5 = m5.est_tail;
    row.residual = exact_side - ((((row.m1 + row.m2) + row.m3) + row.m4) + row.m5);
    row.predicted_scale = std::pow(nd, theorem_error_exponent(ctx));
    row.zero_tuples_used = m3.zero_tuples + m4.zero_tuples + m5.zero_tuples;
    row.lattice_points_used = m2.lattice_points + m4.lattice_points + m5.lattice_points;
    return row;
}

SlopeReport residual_analysis(const std::vector<TermBreakdown>& rows, const TermContext& ctx) {
    if (rows.size() < 4) throw std::domain_error("residual_analysis: need >= 4 grid points");
    std::int64_t n_min = rows.front().n, n_max = rows.front().n;
    for (const auto& row : rows) {
        n_min = std::min(n_min, row.n);
        n_max = std::max(n_max, row.n);
    }
    if (double(n_max) < 10.0 * double(n_min))
        throw std::domain_error("residual_analysis: grid must span at least one decade");

    SlopeReport report;
    report.exponent = theorem_error_exponent(ctx);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : rows) {
        if (row.residual == 0.0) {
            report.excluded.push_back(row.n);
            continue;
        }
        double x = std::log(double(row.n));
        double y = std::log(std::fabs(row.residual));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++report.points_used;
    }
    if (report.points_used < 2) {
        // all residuals vanished: slope 0 passes any positive exponent
        report.slope = 0.0;
        report.pass = report.slope <= report.exponent + 0.15;
        return report;
    }
    double m = double(report.points_used);
    double denom = m * sxx - sx * sx;
    report.slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
    report.pass = report.slope <= report.exponent + 0.15;
    return report;
}

}  // namespace cesaro
