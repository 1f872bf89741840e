#pragma once

#include <stdexcept>
#include <string>

namespace bingham {

/// Invalid input: bad dimensions, out-of-range values, malformed files.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-convergence, broken envelope bound, singular matrix.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bingham
