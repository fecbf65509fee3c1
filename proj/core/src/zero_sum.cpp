#include "cesaro/zero_sum.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include "cesaro/accum.hpp"
#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

constexpr std::int64_t kChunk = 2048;  // fixed: chunk layout must not depend on threads

struct ChunkAccum {
    KahanSum real_sum;
    KahanSum aux_sum;
    KahanSum calib_num;  // sum |coeff| over all-positive-sign tuples
    KahanSum calib_den;  // sum prod gamma_j^{-s_j} over the same tuples
};

}  // namespace

ZeroTupleSumResult eval_zero_tuple_sum(int dim, const TupleCoeff& coeff,
                                       const ZetaZeroTable& zeros, double height,
                                       const std::vector<int>& r_components,
                                       const ZeroTailModel& tail_model, int threads) {
    if (dim < 1 || dim > 16) throw std::domain_error("eval_zero_tuple_sum: need 1 <= dim <= 16");
    if (int(r_components.size()) != dim)
        throw std::logic_error("eval_zero_tuple_sum: r_components size mismatch");
    if (int(tail_model.exponents.size()) != dim)
        throw std::logic_error("eval_zero_tuple_sum: tail model size mismatch");
    if (height > zeros.max_height())
        throw numeric_error("eval_zero_tuple_sum: zero table reaches " +
                            std::to_string(zeros.max_height()) + " but height " +
                            std::to_string(height) + " is required");
    for (double s : tail_model.exponents)
        if (s <= 1.0)
            throw numeric_error("eval_zero_tuple_sum: per-component decay exponent " +
                                std::to_string(s) + " <= 1, sum diverges");

    auto n = std::int64_t(zeros.count_below(height));
    if (n == 0) throw numeric_error("eval_zero_tuple_sum: no zeros below requested height");

    std::int64_t sign_patterns = std::int64_t(1) << (dim - 1);
    std::int64_t total = sign_patterns;
    for (int j = 0; j < dim; ++j) total *= n;

    auto run_chunk = [&](std::int64_t begin, std::int64_t end) {
        ChunkAccum acc;
        std::vector<std::size_t> index(static_cast<std::size_t>(dim));
        std::vector<double> gamma(static_cast<std::size_t>(dim));
        std::vector<int> sign(static_cast<std::size_t>(dim));
        std::vector<Cplx> rho_over_r(static_cast<std::size_t>(dim));
        for (std::int64_t flat = begin; flat < end; ++flat) {
            std::int64_t rest = flat;
            std::int64_t sign_bits = rest % sign_patterns;
            rest /= sign_patterns;
            bool all_positive = sign_bits == 0;
            for (int j = 0; j < dim; ++j) {
                index[std::size_t(j)] = std::size_t(rest % n);
                gamma[std::size_t(j)] = zeros.gammas[index[std::size_t(j)]];
                rest /= n;
                int s = (j > 0 && (sign_bits & (std::int64_t(1) << (j - 1)))) ? -1 : 1;
                sign[std::size_t(j)] = s;
                double r = double(r_components[std::size_t(j)]);
                rho_over_r[std::size_t(j)] = Cplx(0.5 / r, s * gamma[std::size_t(j)] / r);
            }
            ZeroTupleView view{dim, index.data(), gamma.data(), sign.data(), rho_over_r.data()};
            auto [c, aux] = coeff(view);
            acc.real_sum.add(2.0 * c.real());  // tuple + its full conjugate
            acc.aux_sum.add(2.0 * aux);
            if (all_positive) {
                acc.calib_num.add(std::abs(c));
                double envelope = 1.0;
                for (int j = 0; j < dim; ++j)
                    envelope *= std::pow(gamma[std::size_t(j)], -tail_model.exponents[std::size_t(j)]);
                acc.calib_den.add(envelope);
            }
        }
        return acc;
    };

    std::int64_t chunk_count = (total + kChunk - 1) / kChunk;
    std::vector<ChunkAccum> chunks(static_cast<std::size_t>(chunk_count));
    if (threads > 1 && chunk_count > 1) {
        std::atomic<std::int64_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::int64_t id = next.fetch_add(1);
                if (id >= chunk_count) return;
                chunks[std::size_t(id)] =
                    run_chunk(id * kChunk, std::min(total, (id + 1) * kChunk));
            }
        };
        std::vector<std::future<void>> pool;
        for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    } else {
        for (std::int64_t id = 0; id < chunk_count; ++id)
            chunks[std::size_t(id)] = run_chunk(id * kChunk, std::min(total, (id + 1) * kChunk));
    }

    KahanSum value, aux, calib_num, calib_den;
    for (const auto& c : chunks) {  // ascending chunk order: deterministic
        value.add(c.real_sum);
        aux.add(c.aux_sum);
        calib_num.add(c.calib_num);
        calib_den.add(c.calib_den);
    }

    // tail estimate: amplitude calibrated on the computed all-positive tuples,
    // per-component tails via the zero-density integral. Conjugates double it;
    // mixed-sign patterns are exponentially suppressed and ignored.
    double est_tail = 0.0;
    if (calib_den.value() > 0.0) {
        double amplitude = calib_num.value() / calib_den.value();
        std::vector<double> included(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            KahanSum s;
            for (std::int64_t i = 0; i < n; ++i)
                s.add(std::pow(zeros.gammas[std::size_t(i)], -tail_model.exponents[std::size_t(j)]));
            included[std::size_t(j)] = s.value();
        }
        for (int j = 0; j < dim; ++j) {
            double part = zero_tail_estimate(height, tail_model.exponents[std::size_t(j)]);
            for (int i = 0; i < dim; ++i) {
                if (i == j) continue;
                double tail_i = zero_tail_estimate(height, tail_model.exponents[std::size_t(i)]);
                part *= included[std::size_t(i)] + tail_i;
            }
            est_tail += part;
        }
        est_tail *= 2.0 * amplitude;
    }

    ZeroTupleSumResult result;
    result.value = Cplx(value.value(), 0.0);
    result.est_tail = est_tail;
    result.aux_tail = aux.value();
    result.tuples_used = total;
    return result;
}

}  // namespace cesaro
