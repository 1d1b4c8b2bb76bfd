#pragma once

#include <stdexcept>
#include <string>

namespace tschakaloff {

// Argument outside an operation's domain (negative isqrt input, |q| <= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical identity that must hold did not: this is a bug, never a
// user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A search (witness, estimation) ran out of data or range.
class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tschakaloff
