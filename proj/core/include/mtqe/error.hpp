#pragma once

#include <stdexcept>
#include <string>

namespace mtqe {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller misuse: bad flags, mismatched argument lengths. CLI exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

// Bad input data: malformed files, impossible values. CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace mtqe
