#pragma once

#include <stdexcept>
#include <string>

namespace epf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured column is missing or the header is unusable.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A row or field could not be parsed; the message names the location.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation received an empty input it cannot handle.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Matrix or vector shapes do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A numeric argument is outside its valid domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The design matrix is numerically rank deficient.
class RankError : public Error {
public:
    using Error::Error;
};

/// Not enough data to run the requested computation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Bad or inconsistent configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File system / stream failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace epf
