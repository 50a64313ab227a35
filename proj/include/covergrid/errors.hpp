#pragma once

#include <stdexcept>
#include <string>

namespace covergrid {

// Rejected arguments, malformed files, contract violations by the caller.
struct BadInput : std::invalid_argument {
    explicit BadInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// Solver or generator ran out of its configured budget.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

// Postcondition we expect to hold almost surely failed (e.g. genericity
// resampling exhausted). The message carries the seed for reproduction.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace covergrid
