#pragma once

#include <stdexcept>
#include <string>

namespace fraudast {

/// Raised when an experiment config document is malformed or out of range.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a data source cannot be read or parsed.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an output artifact cannot be written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fraudast
