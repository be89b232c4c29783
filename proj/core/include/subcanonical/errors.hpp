#pragma once

#include <stdexcept>
#include <string>

namespace subc {

// Bad user-supplied data (malformed sequences, inconsistent lengths).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Structurally valid input outside an operation's stated domain.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A violated internal invariant; never caused by user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace subc
