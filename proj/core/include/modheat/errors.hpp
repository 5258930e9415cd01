// Exception hierarchy shared by all modheat modules.
#pragma once

#include <stdexcept>
#include <string>

namespace modheat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: out-of-range parameters, malformed configs, unknown names.
struct ValidationError : Error {
    using Error::Error;
};

// Two objects that must live on the same grid do not.
struct GridMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace modheat
