// Error taxonomy shared by the qls library and CLI.
//
// ConfigError covers bad inputs (malformed files, out-of-range parameters,
// precondition violations); GuardError covers numeric guards tripping at
// runtime (enumeration limits, incommensurate coefficients, unsupported
// term orders). The CLI maps them to exit codes 2 and 3 respectively.

#pragma once

#include <stdexcept>
#include <string>

namespace qls {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Coefficients admit no rational approximation within the denominator limit,
// so no finite landscape period exists.
class IncommensurateError : public GuardError {
public:
    explicit IncommensurateError(const std::string& msg) : GuardError(msg) {}
};

// Too many qubits for exact enumeration / statevector simulation.
class EnumerationLimitError : public GuardError {
public:
    explicit EnumerationLimitError(const std::string& msg) : GuardError(msg) {}
};

// Closed-form evaluation requested for a term of weight >= 3.
class UnsupportedOrderError : public GuardError {
public:
    explicit UnsupportedOrderError(const std::string& msg) : GuardError(msg) {}
};

// Rejection sampling exceeded its retry cap.
class RetryLimitError : public GuardError {
public:
    explicit RetryLimitError(const std::string& msg) : GuardError(msg) {}
};

}  // namespace qls
