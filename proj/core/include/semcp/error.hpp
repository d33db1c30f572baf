#pragma once

#include <stdexcept>
#include <string>

namespace semcp {

/// Base class for all errors raised by the library on bad user input
/// (malformed files, schema mismatches, invalid configuration).
/// Numerical statuses (infeasible programs, budget exhaustion) are
/// reported through result types instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace semcp
