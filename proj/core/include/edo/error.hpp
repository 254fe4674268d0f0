#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edo {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration: bad bounds, mismatched dimensions, missing reference data.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Inputs outside an operation's mathematical domain (wrong side of a reference point, empty set).
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

// Problem size exceeds an exact algorithm's budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

// The population could not be filled with members passing the quality gate.
class InitializationFailure : public Error {
public:
    InitializationFailure(std::size_t accepted, std::size_t attempts)
        : Error("initialization failed: " + std::to_string(accepted) + " accepted out of " +
                std::to_string(attempts) + " candidates (acceptance rate " +
                std::to_string(attempts == 0 ? 0.0 : double(accepted) / double(attempts)) + ")"),
          accepted_(accepted), attempts_(attempts) {}

    std::size_t accepted() const noexcept { return accepted_; }
    std::size_t attempts() const noexcept { return attempts_; }
    double acceptance_rate() const noexcept {
        return attempts_ == 0 ? 0.0 : double(accepted_) / double(attempts_);
    }

private:
    std::size_t accepted_;
    std::size_t attempts_;
};

} // namespace edo
