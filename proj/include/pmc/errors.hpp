#ifndef PMC_ERRORS_HPP
#define PMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pmc {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand dimensions incompatible with the requested operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A matrix required to be invertible has determinant zero.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// A value violates an operation's domain (index out of range, negative
// radius entry, non-positive scale factor, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace pmc

#endif // PMC_ERRORS_HPP
