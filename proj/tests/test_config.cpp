#include <doctest.h>

#include <string>

#include "cesaro/config.hpp"
#include "cesaro/errors.hpp"

using cesaro::config_error;
using cesaro::parse_config;

TEST_CASE("threshold arithmetic and warnings") {
    auto cfg = parse_config(R"({"d":1,"h":0,"r":[1],"k":2,"N_values":[100]})");
    CHECK(cfg.theorem_regime);  // 2 > 1/2
    CHECK(cfg.warnings.empty());

    auto low = parse_config(R"({"d":2,"h":2,"r":[1,2],"k":1,"N_values":[100]})");
    CHECK(!low.theorem_regime);  // 1 <= 2
    REQUIRE(low.warnings.size() == 1);
    CHECK(low.warnings[0].find("k") != std::string::npos);
}

TEST_CASE("r is sorted on load") {
    auto cfg = parse_config(R"({"d":2,"h":0,"r":[2,1],"k":3,"N_values":[100]})");
    CHECK(cfg.spec.r == std::vector<int>{1, 2});
}

TEST_CASE("N values are sorted and deduplicated") {
    auto cfg = parse_config(R"({"d":1,"h":0,"r":[1],"k":2,"N_values":[500,100,500]})");
    CHECK(cfg.n_values == std::vector<std::int64_t>{100, 500});
}

TEST_CASE("missing keys name the key") {
    try {
        (void)parse_config(R"({"d":1,"h":0,"r":[1],"k":2})");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("N_values") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_config("{not json"), config_error);
}

TEST_CASE("value domain violations") {
    CHECK_THROWS_AS((void)parse_config(R"({"d":0,"h":0,"r":[],"k":2,"N_values":[10]})"),
                    std::domain_error);
    CHECK_THROWS_AS((void)parse_config(R"({"d":1,"h":0,"r":[1],"k":0,"N_values":[10]})"),
                    std::domain_error);
    CHECK_THROWS_AS((void)parse_config(R"({"d":1,"h":0,"r":[1],"k":-1,"N_values":[10]})"),
                    std::domain_error);
    CHECK_THROWS_AS((void)parse_config(R"({"d":1,"h":0,"r":[1,2],"k":2,"N_values":[10]})"),
                    std::domain_error);
    CHECK_THROWS_AS((void)parse_config(R"({"d":1,"h":0,"r":[1],"k":2,"N_values":[1]})"),
                    std::domain_error);
    CHECK_THROWS_AS(
        (void)parse_config(R"({"d":1,"h":0,"r":[1],"k":2,"N_values":[10],"series_tolerance":0.1})"),
        std::domain_error);
    CHECK_THROWS_AS((void)parse_config(R"({"d":17,"h":0,"r":[1],"k":2,"N_values":[10]})"),
                    std::domain_error);
}

TEST_CASE("defaults for the optional truncation knobs") {
    auto cfg = parse_config(R"({"d":1,"h":0,"r":[1],"k":2,"N_values":[100]})");
    CHECK(cfg.zero_height > 0.0);
    CHECK(cfg.lattice_norm_max > 0.0);
    CHECK(cfg.series_tolerance > 0.0);
    CHECK(cfg.series_tolerance <= 1e-3);
}
