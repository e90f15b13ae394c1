#pragma once

#include <stdexcept>
#include <string>

namespace cqms {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-contract input (non-finite entries, bad dimensions, ...).
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

/// A caller-side precondition does not hold (distinct from malformed data).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Linear program has an empty feasible region.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error(msg) {}
};

/// Linear program objective is unbounded over the feasible region.
class UnboundedError : public Error {
public:
    explicit UnboundedError(const std::string& msg) : Error(msg) {}
};

} // namespace cqms
