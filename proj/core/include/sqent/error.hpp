// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sqent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shape, non-Hermitian, not normalized, bad index set.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Parameter outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Matrix has eigenvalues too negative to be a quantum state.
class NotAStateError : public Error {
public:
    using Error::Error;
};

/// Requested object would exceed a configured size limit.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Truncated Fock-space result is dominated by mass at the cutoff.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Lowest eigenspace is degenerate, so no unique answer exists.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

/// Caller-side precondition of a consistency check does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace sqent
