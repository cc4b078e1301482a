#pragma once

#include <stdexcept>
#include <string>

namespace facelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (rationals, polytope files, face ids, flags).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A self-check inside an algorithm failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

} // namespace facelab
