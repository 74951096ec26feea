#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpg {

/// Base class for every error raised by the load-profile library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed plan or machine document. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Values that parse but violate a domain invariant (negative mass, D_rod >= D_cyl, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Mechanism pose where a force formula divides by a vanishing sine, or
/// a triangle that cannot be closed.
class GeometryError : public Error {
public:
    using Error::Error;
};

}  // namespace lpg
