#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

// Error categories, mirrored by the CLI exit codes:
//   config_error  -> 1   (bad or missing configuration)
//   data_error    -> 2   (malformed or implausible input data)
//   numeric_error -> 3   (tolerance not met, truncation too short, ...)
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cesaro
