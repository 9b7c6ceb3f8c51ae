#pragma once

#include <stdexcept>
#include <string>

namespace eulerian {

// Enumeration or iteration budget exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A parameter value for which the requested formula degenerates (e.g. the
// generating-function denominators vanish at t = 1).
struct DegenerateParameterError : std::domain_error {
    explicit DegenerateParameterError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace eulerian
