#include "cesaro/repr.hpp"

#include <cmath>
#include <stdexcept>

#include "cesaro/accum.hpp"

namespace cesaro {

namespace {

void check_spec(const SummandSpec& spec) {
    if (spec.d < 1) throw std::domain_error("repr_counts: need d >= 1");
    if (spec.h < 0) throw std::domain_error("repr_counts: need h >= 0");
    if (int(spec.r.size()) != spec.d) throw std::domain_error("repr_counts: r must have d entries");
    for (int rj : spec.r)
        if (rj < 1) throw std::domain_error("repr_counts: exponents must be >= 1");
}

// largest m with m^r <= n, avoiding pow() edge rounding
std::int64_t integer_root(std::int64_t n, int r) {
    if (n < 1) return 0;
    auto ipow_leq = [&](std::int64_t m) {
        std::int64_t acc = 1;
        for (int i = 0; i < r; ++i) {
            if (m != 0 && acc > n / m) return false;
            acc *= m;
        }
        return acc <= n;
    };
    auto m = std::int64_t(std::floor(std::pow(double(n), 1.0 / r)));
    while (!ipow_leq(m)) --m;
    while (ipow_leq(m + 1)) ++m;
    return m;
}

std::int64_t ipow(std::int64_t m, int r) {
    std::int64_t acc = 1;
    for (int i = 0; i < r; ++i) acc *= m;
    return acc;
}

}  // namespace

ReprTable repr_counts(const SummandSpec& spec, std::int64_t n_max, const VonMangoldtTable& lambda) {
    check_spec(spec);
    if (n_max < 2) throw std::domain_error("repr_counts: need N >= 2");
    int min_r = spec.r.front();
    for (int rj : spec.r) min_r = std::min(min_r, rj);
    if (lambda.limit() < integer_root(n_max, min_r))
        throw std::domain_error("repr_counts: Lambda table too short for N^(1/min r)");

    std::size_t size = std::size_t(n_max) + 1;
    // dense (value, compensation) pair per cell; the fold visits cells in
    // ascending source index so each cell's summation order is fixed
    std::vector<double> cur(size, 0.0), cur_c(size, 0.0);
    cur[0] = 1.0;

    auto fold = [&](const std::vector<std::pair<std::int64_t, double>>& support) {
        std::vector<double> next(size, 0.0), next_c(size, 0.0);
        for (std::size_t src = 0; src < size; ++src) {
            double val = cur[src] + cur_c[src];
            if (val == 0.0) continue;
            for (const auto& [offset, weight] : support) {
                std::int64_t dst = std::int64_t(src) + offset;
                if (dst > n_max) break;
                double x = val * weight;
                double& s = next[std::size_t(dst)];
                double t = s + x;
                if (std::fabs(s) >= std::fabs(x))
                    next_c[std::size_t(dst)] += (s - t) + x;
                else
                    next_c[std::size_t(dst)] += (x - t) + s;
                s = t;
            }
        }
        cur.swap(next);
        cur_c.swap(next_c);
    };

    // prime-power factors first (sparser), squares after
    for (int j = 0; j < spec.d; ++j) {
        int rj = spec.r[std::size_t(j)];
        std::vector<std::pair<std::int64_t, double>> support;
        std::int64_t m_hi = integer_root(n_max, rj);
        for (std::int64_t m = 2; m <= m_hi; ++m) {
            double w = lambda.values[std::size_t(m)];
            if (w != 0.0) support.emplace_back(ipow(m, rj), w);
        }
        fold(support);
    }
    for (int i = 0; i < spec.h; ++i) {
        // t >= 1: the square factors mirror omega_2(z) = sum_{m>=1} e^{-m^2 z},
        // which is what the generating identity and the M-term combinatorics use
        std::vector<std::pair<std::int64_t, double>> support;
        for (std::int64_t t = 1; t * t <= n_max; ++t) support.emplace_back(t * t, 1.0);
        fold(support);
    }

    ReprTable table;
    table.n_max = n_max;
    table.spec = spec;
    table.values.resize(size);
    for (std::size_t i = 0; i < size; ++i) table.values[i] = cur[i] + cur_c[i];
    return table;
}

ReprTable repr_counts_bruteforce(const SummandSpec& spec, std::int64_t n_max,
                                 const VonMangoldtTable& lambda) {
    check_spec(spec);
    if (n_max > 5000) throw std::domain_error("repr_counts_bruteforce: refuses N > 5000");
    if (n_max < 2) throw std::domain_error("repr_counts_bruteforce: need N >= 2");

    ReprTable table;
    table.n_max = n_max;
    table.spec = spec;
    table.values.assign(std::size_t(n_max) + 1, 0.0);

    // depth-first over (m_1..m_d, t_1..t_h)
    auto recurse = [&](auto&& self, int slot, std::int64_t partial, double weight) -> void {
        if (slot < spec.d) {
            int rj = spec.r[std::size_t(slot)];
            for (std::int64_t m = 2;; ++m) {
                std::int64_t p = ipow(m, rj);
                if (partial + p > n_max) break;
                double w = lambda.values[std::size_t(m)];
                if (w == 0.0) continue;
                self(self, slot + 1, partial + p, weight * w);
            }
        } else if (slot < spec.d + spec.h) {
            for (std::int64_t t = 1; partial + t * t <= n_max; ++t)
                self(self, slot + 1, partial + t * t, weight);
        } else {
            table.values[std::size_t(partial)] += weight;
        }
    };
    recurse(recurse, 0, 0, 1.0);
    return table;
}

double cesaro_average(const ReprTable& table, std::int64_t n, double k) {
    if (k <= 0.0) throw std::domain_error("cesaro_average: need k > 0");
    if (n > table.n_max) throw std::domain_error("cesaro_average: N exceeds table");
    KahanSum sum;
    for (std::int64_t m = 0; m <= n; ++m) {
        double v = table.values[std::size_t(m)];
        if (v != 0.0) sum.add(v * std::pow(double(n - m), k));
    }
    return sum.value() / std::tgamma(k + 1.0);
}

}  // namespace cesaro
