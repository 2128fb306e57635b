#pragma once

#include <stdexcept>
#include <string>

namespace porbit {

/// Thrown when an exhaustive computation would exceed its combinatorial budget.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files (carries a human-readable location).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace porbit
