#pragma once

#include <stdexcept>
#include <string>

namespace branchkit {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input supplied by a caller.
class invalid_input : public error {
public:
    using error::error;
};

// A size guard tripped (enumeration would be too large, or an exact
// integer would overflow).
class guard_exceeded : public error {
public:
    using error::error;
};

// A mathematical invariant failed on valid input. Always a bug.
class internal_error : public error {
public:
    using error::error;
};

} // namespace branchkit
