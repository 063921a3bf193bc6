#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrlocal {

// Every failure raised by the library derives from Error. The CLI maps
// ResourceError and GenericityError to exit code 2 and everything else to 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Size guards (lattice, irreducibility, circuit enumeration).
class ResourceError : public Error {
public:
    using Error::Error;
};

class GenericityError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. Never caught inside the library.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace arrlocal
