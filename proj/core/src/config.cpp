#include "cesaro/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cesaro/errors.hpp"

namespace cesaro {

ProblemConfig parse_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("parse_config: malformed document: ") + e.what());
    }

    for (const char* key : {"d", "h", "r", "k", "N_values"})
        if (!doc.contains(key))
            throw config_error(std::string("parse_config: missing required key '") + key + "'");

    ProblemConfig cfg;
    try {
        cfg.spec.d = doc.at("d").get<int>();
        cfg.spec.h = doc.at("h").get<int>();
        cfg.spec.r = doc.at("r").get<std::vector<int>>();
        cfg.k = doc.at("k").get<double>();
        cfg.n_values = doc.at("N_values").get<std::vector<std::int64_t>>();
        if (doc.contains("zero_count_T")) cfg.zero_height = doc.at("zero_count_T").get<double>();
        if (doc.contains("lattice_norm_max"))
            cfg.lattice_norm_max = doc.at("lattice_norm_max").get<double>();
        if (doc.contains("series_tolerance"))
            cfg.series_tolerance = doc.at("series_tolerance").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("parse_config: bad value type: ") + e.what());
    }

    if (cfg.spec.d < 1) throw std::domain_error("parse_config: need d >= 1");
    if (cfg.spec.d > 16) throw std::domain_error("parse_config: d capped at 16 (2^d subset loop)");
    if (cfg.spec.h < 0) throw std::domain_error("parse_config: need h >= 0");
    if (cfg.spec.h > 8) throw std::domain_error("parse_config: h capped at 8");
    if (int(cfg.spec.r.size()) != cfg.spec.d)
        throw std::domain_error("parse_config: r must have exactly d entries");
    for (int rj : cfg.spec.r)
        if (rj < 1) throw std::domain_error("parse_config: every r_j must be >= 1");
    if (cfg.k <= 0.0) throw std::domain_error("parse_config: need k > 0");
    if (cfg.n_values.empty()) throw std::domain_error("parse_config: N_values must be non-empty");
    for (std::int64_t n : cfg.n_values)
        if (n < 2) throw std::domain_error("parse_config: every N must be >= 2");
    if (cfg.zero_height <= 0.0) throw std::domain_error("parse_config: need zero_count_T > 0");
    if (cfg.lattice_norm_max <= 0.0)
        throw std::domain_error("parse_config: need lattice_norm_max > 0");
    if (cfg.series_tolerance <= 0.0 || cfg.series_tolerance > 1e-3)
        throw std::domain_error("parse_config: series_tolerance must lie in (0, 1e-3]");

    // R depends only on the multiset of r; the theorem assumes r ascending
    std::sort(cfg.spec.r.begin(), cfg.spec.r.end());
    std::sort(cfg.n_values.begin(), cfg.n_values.end());
    cfg.n_values.erase(std::unique(cfg.n_values.begin(), cfg.n_values.end()), cfg.n_values.end());

    double threshold = (cfg.spec.d + cfg.spec.h) / 2.0;
    cfg.theorem_regime = cfg.k > threshold;
    if (!cfg.theorem_regime)
        cfg.warnings.push_back("k = " + std::to_string(cfg.k) +
                               " is outside the proven regime k > (d+h)/2 = " +
                               std::to_string(threshold) +
                               "; the expansion is exploratory here");
    return cfg;
}

ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("load_config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace cesaro
