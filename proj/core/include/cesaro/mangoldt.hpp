#pragma once

#include <cstdint>
#include <vector>

namespace cesaro {

// values[m] = Lambda(m) (natural log), m = 0..N. Roughly 8 bytes/entry.
struct VonMangoldtTable {
    std::vector<double> values;
    std::int64_t limit() const { return std::int64_t(values.size()) - 1; }
};

// Eratosthenes sieve; log p computed once per prime and reused for powers.
VonMangoldtTable sieve_von_mangoldt(std::int64_t n);

}  // namespace cesaro
