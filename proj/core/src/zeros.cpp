#include "cesaro/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

std::size_t ZetaZeroTable::count_below(double t) const {
    return std::size_t(std::upper_bound(gammas.begin(), gammas.end(), t) - gammas.begin());
}

ZetaZeroTable parse_zeros(const std::string& text, const std::string& origin) {
    ZetaZeroTable table;
    table.source_hash = fnv1a_hex(text);

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::size_t parsed = 0;
        double value = 0.0;
        try {
            value = std::stod(line.substr(first), &parsed);
        } catch (const std::exception&) {
            throw data_error(origin + ":" + std::to_string(line_no) + ": not a number");
        }
        if (value <= 0.0)
            throw data_error(origin + ":" + std::to_string(line_no) + ": zero ordinate must be positive");
        if (!table.gammas.empty() && value <= table.gammas.back())
            throw data_error(origin + ":" + std::to_string(line_no) + ": ordinates must be strictly ascending");
        table.gammas.push_back(value);
    }
    if (table.gammas.empty()) throw data_error(origin + ": empty zero table");
    if (table.gammas.front() < 14.134 || table.gammas.front() > 14.135)
        throw data_error(origin + ": first zero must be ~14.1347, got " +
                         std::to_string(table.gammas.front()));
    return table;
}

ZetaZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("load_zeros: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_zeros(buf.str(), path);
}

double riemann_von_mangoldt_estimate(double t) {
    return t / (2.0 * kPi) * std::log(t / (2.0 * kPi * std::numbers::e)) + 7.0 / 8.0;
}

ZeroDiagnostics validate_zeros(const ZetaZeroTable& table) {
    ZeroDiagnostics diag;
    diag.count = table.gammas.size();
    for (std::size_t i = 0; i < table.gammas.size(); ++i) {
        double estimate = riemann_von_mangoldt_estimate(table.gammas[i]);
        diag.max_counting_deviation =
            std::max(diag.max_counting_deviation, std::fabs(double(i + 1) - estimate));
    }
    diag.last_height = table.gammas.back();
    std::size_t n = table.gammas.size();
    diag.density_ratio = n > 1 ? diag.last_height * std::log(double(n)) / (2.0 * kPi * double(n)) : 0.0;
    if (diag.max_counting_deviation > 2.0)
        throw data_error("validate_zeros: counting function deviates by " +
                         std::to_string(diag.max_counting_deviation) +
                         " from the Riemann-von Mangoldt estimate (corrupt or subsampled table)");
    return diag;
}

double zero_tail_estimate(double t, double s) {
    if (s <= 1.0) throw std::domain_error("zero_tail_estimate: need s > 1");
    if (t < 14.0) throw std::domain_error("zero_tail_estimate: need T >= 14");
    double p = std::pow(t, 1.0 - s);
    return (p / (2.0 * kPi)) * (std::log(t / (2.0 * kPi)) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
}

}  // namespace cesaro
