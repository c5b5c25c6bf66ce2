#pragma once

#include <stdexcept>

namespace y00 {

/// Raised when a request exceeds a documented desk-scale budget
/// (brute-force key width, enumeration size, ...).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace y00
