#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powmon {

/// Base class of every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input: set literals, rationals, integers.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An element list that violates the membership rules of the monoid
/// (empty, or 0 missing).
class InvalidSetError : public Error {
public:
    using Error::Error;
};

/// Unsigned 64-bit arithmetic would wrap.  Results are never reduced
/// modulo 2^64 behind the caller's back.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// The configured search budget ran out before the enumeration finished.
/// Partial results are discarded, never returned as if complete.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A checked precondition of an operation does not hold.  `which()` names
/// the first failing condition.
class PreconditionError : public Error {
public:
    PreconditionError(std::string which, const std::string& message)
        : Error(message), which_(std::move(which)) {}

    const std::string& which() const noexcept { return which_; }

private:
    std::string which_;
};

/// An explicit scale sequence for the ladder construction breaks the
/// growth constraint; `index()` is the first offending position (1-based,
/// matching the sequence written by the caller).
class InvalidSequenceError : public Error {
public:
    InvalidSequenceError(std::size_t index, const std::string& message)
        : Error(message), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Input exceeds a hard cap of the brute-force reference oracle.  The
/// caps are deliberate: the oracle exists to check the real engine on
/// small inputs, not to scale.
class CapError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the documented domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace powmon
