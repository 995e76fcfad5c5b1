#pragma once

#include <stdexcept>
#include <string>

namespace unicrit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematically invalid request (division by zero, mismatched fields,
/// violated preconditions). CLI exit status 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input. CLI exit status 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An enumeration or construction would exceed the configured desk-scale
/// size limit.
class LimitError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A truncated Laurent computation lost too many leading terms to give a
/// trustworthy answer.
class PrecisionError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace unicrit
