#pragma once

#include <stdexcept>
#include <string>

namespace meanest {

/// Bad experiment/CLI configuration. Maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File read/write failure, including malformed point-set files.
/// Maps to exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meanest
