#pragma once

#include <stdexcept>
#include <string>

namespace latwalk {

// Input outside the mathematically supported domain (e.g. x beyond the
// convergence bound of a generating function).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration (trial counts, stop rules, flag combinations).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latwalk
