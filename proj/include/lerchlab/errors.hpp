#pragma once

#include <stdexcept>
#include <string>

namespace lerchlab {

struct domain_error : std::domain_error {
    explicit domain_error(const std::string& m) : std::domain_error(m) {}
};

// Evaluation requested at (or too close to) a pole of the function.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& m) : std::domain_error(m) {}
};

struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& m) : std::invalid_argument(m) {}
};

}  // namespace lerchlab
