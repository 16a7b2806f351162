#pragma once

#include <stdexcept>
#include <string>

namespace gqc {

// Input that cannot be parsed (CLI exit code 1).
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented operation precondition does not hold (CLI exit code 2).
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An enumeration would exceed the configured dimension cap (CLI exit code 3).
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gqc
