#pragma once

#include <stdexcept>
#include <string>

namespace begdob {

/// Input outside the mathematical domain of an operation (e.g. a bound
/// evaluated at a point outside A u B u C, or t <= 0 for r(t)).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Exhaustive enumeration requested beyond the supported size.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace begdob
