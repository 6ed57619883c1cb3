// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace alphaineq {

// Error taxonomy shared by every module. All failures derive from Error so
// the CLI boundary can catch the whole family and map it to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite or otherwise inadmissible numeric input.
class DomainError : public Error {
public:
    using Error::Error;
};

// Two alpha-typed values with different dimensions were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Zero raised to a negative exponent, or a zero denominator in a ratio form.
class PoleError : public Error {
public:
    using Error::Error;
};

// Exponent parameters outside the holder/reverse regime they were used in.
class RegimeError : public Error {
public:
    using Error::Error;
};

// Vector/matrix size mismatch.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Result left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Magnitude outside the supported evaluation range [0, 1e6].
class RangeError : public Error {
public:
    using Error::Error;
};

// Bad CLI invocation, unknown inequality id, conflicting options.
class UsageError : public Error {
public:
    using Error::Error;
};

// Instance file could not be parsed or validated; message names the line.
class IngestionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace alphaineq
