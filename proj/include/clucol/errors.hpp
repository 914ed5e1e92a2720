#pragma once

#include <stdexcept>
#include <string>

namespace clucol {

// Bad argument values: out-of-range vertex ids, malformed structures, parse failures.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Instance exceeds an enumeration cap or an operation budget.
struct size_error : std::runtime_error {
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction's stated precondition fails on the concrete data.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace clucol
