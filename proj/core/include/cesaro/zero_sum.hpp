#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cesaro/zeros.hpp"

namespace cesaro {

using Cplx = std::complex<double>;

// One multi-zero tuple, canonicalized: the first component always carries a
// positive ordinate; the full-conjugate partner is accounted for by doubling
// the real part (multiplicity 2).
struct ZeroTupleView {
    int dim = 0;
    const std::size_t* index = nullptr;  // positions in the zero table
    const double* gamma = nullptr;       // positive ordinates, per component
    const int* sign = nullptr;           // +-1, sign[0] == +1
    const Cplx* rho_over_r = nullptr;    // (1/2 + i sign gamma) / r_j per component

    Cplx tau_rho() const {
        Cplx acc(0.0, 0.0);
        for (int j = 0; j < dim; ++j) acc += rho_over_r[j];
        return acc;
    }
};

// coefficient of one tuple plus any auxiliary truncation tail it carries
// (e.g. the Bessel lattice tail inside an M4/M5 integrand).
using TupleCoeff = std::function<std::pair<Cplx, double>(const ZeroTupleView&)>;

// Per-component polynomial decay exponents of |coeff|; used with
// zero_tail_estimate to price the omitted tuples. All must exceed 1.
struct ZeroTailModel {
    std::vector<double> exponents;
};

struct ZeroTupleSumResult {
    Cplx value;               // imaginary part is exactly 0 by pairing
    double est_tail = 0.0;    // zero-truncation estimate (non-rigorous)
    double aux_tail = 0.0;    // accumulated auxiliary tails from coeff
    std::int64_t tuples_used = 0;
};

// Sums coeff over all tuples of dim zeros with |gamma| <= height and both
// conjugate signs, conjugate pairs merged (2 Re). Enumeration is chunked by
// canonical index and chunk sums combine in ascending order, so the result
// is bit-identical for any thread count.
ZeroTupleSumResult eval_zero_tuple_sum(int dim, const TupleCoeff& coeff,
                                       const ZetaZeroTable& zeros, double height,
                                       const std::vector<int>& r_components,
                                       const ZeroTailModel& tail_model, int threads = 1);

}  // namespace cesaro
