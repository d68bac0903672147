#pragma once

#include <stdexcept>
#include <string>

namespace casclab {

/// Bad input: out-of-range node, malformed edge list, parameter outside its domain.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested parameters cannot be met (e.g. a Waxman target degree needing q > 1).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace casclab
