#pragma once

#include <stdexcept>
#include <string>

namespace rackcast {

/// Base of the project exception taxonomy. `error_class()` is the
/// machine-parsable class name the CLI prints on failure.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* error_class() const noexcept { return "error"; }
    virtual int exit_code() const noexcept { return 3; }
};

/// Bad parameters, bad config keys, unusable hyperparameters. Exit code 1.
class ConfigError : public Error {
public:
    using Error::Error;
    const char* error_class() const noexcept override { return "config"; }
    int exit_code() const noexcept override { return 1; }
};

/// Problems with input data: missing files, schema violations, shape
/// mismatches, series too short to use. Exit code 2.
class DataError : public Error {
public:
    using Error::Error;
    const char* error_class() const noexcept override { return "data"; }
    int exit_code() const noexcept override { return 2; }
};

/// A violated internal invariant; always a bug. Exit code 3.
class InternalError : public Error {
public:
    using Error::Error;
    const char* error_class() const noexcept override { return "internal"; }
    int exit_code() const noexcept override { return 3; }
};

} // namespace rackcast
