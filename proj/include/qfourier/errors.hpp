#ifndef QFOURIER_ERRORS_HPP
#define QFOURIER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfourier {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mathematical domain failures: the request is well formed but the value does
// not exist or cannot be computed reliably (CLI exit code 3).
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleProximity : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroArgument : public DomainError {
public:
    using DomainError::DomainError;
};

class NonConvergent : public DomainError {
public:
    using DomainError::DomainError;
};

class NonIntegrable : public DomainError {
public:
    using DomainError::DomainError;
};

class OutOfStrip : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidNu : public DomainError {
public:
    using DomainError::DomainError;
};

class Overflow : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed requests: bad windows, unsupported tags, bad files (exit code 2).
class UsageError : public Error {
public:
    using Error::Error;
};

class WindowError : public UsageError {
public:
    using UsageError::UsageError;
};

class UnsupportedDistribution : public UsageError {
public:
    using UsageError::UsageError;
};

class ParseError : public UsageError {
public:
    using UsageError::UsageError;
};

} // namespace qfourier

#endif
