#include "cesaro/mangoldt.hpp"

#include <cmath>
#include <stdexcept>

namespace cesaro {

VonMangoldtTable sieve_von_mangoldt(std::int64_t n) {
    if (n < 2) throw std::domain_error("sieve_von_mangoldt: need N >= 2");

    std::vector<bool> composite(std::size_t(n) + 1, false);
    VonMangoldtTable table;
    table.values.assign(std::size_t(n) + 1, 0.0);

    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[std::size_t(p)]) continue;
        double logp = std::log(double(p));
        for (std::int64_t q = p * p; q <= n; q += p) composite[std::size_t(q)] = true;
        // p^j <= n; the multiplication cannot overflow before exceeding n
        for (std::int64_t pw = p; pw <= n; pw *= p) {
            table.values[std::size_t(pw)] = logp;
            if (pw > n / p) break;
        }
    }
    return table;
}

}  // namespace cesaro
