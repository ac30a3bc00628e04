#pragma once

#include <stdexcept>
#include <string>

namespace codekit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed text input: code-set files, regexes, theta maps, distributions.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (epsilon in a code, foreign
/// letter, alphabet mismatch, already complete input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured guard (state cap, iteration cap) was exceeded. Never a
/// wrong answer, only a refusal to continue.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A mechanically checked fact turned out false. Signals an implementation
/// defect, since every such check restates a proven property.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace codekit
