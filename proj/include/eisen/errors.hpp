#ifndef EISEN_ERRORS_HPP
#define EISEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eisen
{

// Base class for every error raised by the library. The CLI maps the
// concrete type onto an exit code.
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
    virtual const char *kind() const noexcept { return "Error"; }
};

// Argument inside an exclusion disk around a pole.
class PoleError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "PoleError"; }
};

// Result not representable in double precision.
class OverflowError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "OverflowError"; }
};

// Argument outside the mathematical domain (y <= 0 and the like).
class DomainError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "DomainError"; }
};

// Series requested outside its half-plane of convergence.
class DivergenceError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "DivergenceError"; }
};

// Iterative scheme failed to reach the requested accuracy within its budget.
class ConvergenceError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "ConvergenceError"; }
};

// Invalid configuration or violated invariant of a value type.
class PreconditionError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "PreconditionError"; }
};

class InvalidTypeError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "InvalidTypeError"; }
};

class ResourceError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "ResourceError"; }
};

// Input data missing or unreadable.
class DataError : public Error
{
public:
    using Error::Error;
    const char *kind() const noexcept override { return "DataError"; }
};

// Malformed input data; carries the 1-based line number.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string &msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line)
    {}
    const char *kind() const noexcept override { return "ParseError"; }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace eisen

#endif
