#pragma once

#include <stdexcept>
#include <string>

namespace tableau_orbits {

/// Input violates an operation's precondition (wrong kind of tableau, bad interval, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Grid does not describe a (skew) Young diagram, or entries do not match it.
class StructuralError : public std::invalid_argument {
public:
    explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// A property that holds by construction was found broken. Always a bug.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace tableau_orbits
