#pragma once

#include <stdexcept>

namespace skein {

/// Evaluation hit a pole (denominator vanished at the requested point).
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A linear system whose determinant is the zero function.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A brute-force oracle was asked for labels beyond its configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace skein
