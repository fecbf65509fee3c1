#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cesaro {

using Cplx = std::complex<double>;

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc = acc * double(n - k + i) / double(i);
    return acc;
}

// tau(Psi, r, J) = sum_{j in J} Psi_j / r_j. subset is a bitmask over the d
// slots (bit j = slot j+1); weights, when given, are aligned with the set
// bits in ascending order, otherwise Psi = 1.
struct TauProduct {
    Cplx value;
    std::uint32_t subset = 0;
    bool weighted = false;
};

inline TauProduct tau(const std::vector<int>& r, std::uint32_t subset,
                      const std::vector<Cplx>* weights = nullptr) {
    if (subset >= (1u << r.size()))
        throw std::logic_error("tau: subset mask exceeds the r vector");
    if (weights && weights->size() != std::size_t(std::popcount(subset)))
        throw std::logic_error("tau: weight count does not match subset size");
    Cplx acc(0.0, 0.0);
    std::size_t w = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (!(subset & (1u << j))) continue;
        Cplx psi = weights ? (*weights)[w++] : Cplx(1.0, 0.0);
        acc += psi / double(r[j]);
    }
    return {acc, subset, weights != nullptr};
}

inline double tau_ones(const std::vector<int>& r, std::uint32_t subset) {
    return tau(r, subset).value.real();
}

inline std::uint32_t full_mask(std::size_t d) { return (1u << d) - 1u; }

}  // namespace cesaro
