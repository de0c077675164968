#ifndef ABMEQL_ERRORS_HPP
#define ABMEQL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abmeql {

// Invalid configuration or input data. Maps to exit code 2 at the CLI.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (divergence, singular data, ...). Maps to exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace abmeql

#endif
