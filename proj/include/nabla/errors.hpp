#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nabla {

/// Common base for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The nowhere-defined outcome surfaced where a meaningful chain is required.
class MeaninglessChain : public Error {
public:
    using Error::Error;
};

class SortMismatch : public Error {
public:
    using Error::Error;
};

/// A field was handed to a check whose precondition is membership in a collection.
class NotInCollection : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class DepthUnsupported : public Error {
public:
    using Error::Error;
};

/// Malformed field document or coefficient string.
class FormatError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string message)
        : Error("at offset " + std::to_string(position) + ": " + message),
          position_(position),
          message_(std::move(message)) {}

    /// Offset in characters (code points), not bytes.
    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

}  // namespace nabla
