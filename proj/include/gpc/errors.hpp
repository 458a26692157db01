#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input-data problems (bad CSV rows, invalid points). CLI exit code 3.
class DataError : public Error {
public:
    using Error::Error;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InvalidPoint : public DataError {
public:
    InvalidPoint(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DegenerateNormalizer : public DataError {
public:
    using DataError::DataError;
};

class InvalidWeight : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OrderTooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class TooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class SigmaMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InvalidMatching : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

/// A theorem's stated assumption does not hold for the given inputs. CLI exit code 4.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class WeightKindMismatch : public HypothesisViolated {
public:
    using HypothesisViolated::HypothesisViolated;
};

}  // namespace gpc
